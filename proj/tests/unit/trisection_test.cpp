#include <doctest.h>

#include <random>

#include "support/oracles.hpp"
#include "thin4/decomposition.hpp"
#include "thin4/trisection.hpp"

using namespace thin4;

namespace {

CutSystem system_of(std::vector<std::vector<long long>> rows) {
  CutSystem s;
  for (auto& r : rows) {
    Curve c;
    c.cls = std::move(r);
    s.curves.push_back(std::move(c));
  }
  return s;
}

IntegerMatrix mat(const std::vector<std::vector<long long>>& rows) {
  IntegerMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c)
      m.at(r, c) = to_mpz(rows[r][c]);
  return m;
}

}  // namespace

TEST_CASE("cut system validation") {
  CHECK(validate_cut_system(system_of({{1, 0}}), 1).empty());
  CHECK_FALSE(validate_cut_system(system_of({{2, 0}}), 1).empty());
  // coordinates interleave (a1, b1, a2, b2): {a1, a2} is fine,
  // {a1, b1} pairs to 1 and fails
  CHECK(validate_cut_system(system_of({{1, 0, 0, 0}, {0, 0, 1, 0}}), 2)
            .empty());
  CHECK_FALSE(validate_cut_system(system_of({{1, 0, 0, 0}, {0, 1, 0, 0}}), 2)
                  .empty());
  CHECK(validate_cut_system(system_of({{1, 0}}), 2).size() == 1);  // count
  // dependent classes span a proper sublattice of rank < g
  CHECK_FALSE(validate_cut_system(system_of({{1, 0, 0, 0}, {1, 0, 0, 0}}), 2)
                  .empty());
}

TEST_CASE("pairwise k") {
  CHECK(pairwise_k(system_of({{1, 0}}), system_of({{0, 1}}), 1) == 0);
  CHECK(pairwise_k(system_of({{1, 0}}), system_of({{1, 0}}), 1) == 1);
  // alpha = {a1, a2}, beta = {b1, a2}: pairing diag(1, 0), one S1xS2 factor
  CHECK(pairwise_k(system_of({{1, 0, 0, 0}, {0, 0, 1, 0}}),
                   system_of({{0, 1, 0, 0}, {0, 0, 1, 0}}), 2) == 1);
  CHECK_THROWS_WITH_AS(
      pairwise_k(system_of({{1, 0}}), system_of({{1, 2}}), 1),
      "not a #k S1xS2 diagram (torsion obstruction)", std::invalid_argument);
  // symmetry
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    std::uniform_int_distribution<long long> v(-2, 2);
    std::vector<long long> x{v(rng), v(rng)}, y{v(rng), v(rng)};
    CutSystem sx = system_of({x}), sy = system_of({y});
    if (!validate_cut_system(sx, 1).empty() ||
        !validate_cut_system(sy, 1).empty())
      continue;
    long long kxy = -1, kyx = -1;
    bool txy = false, tyx = false;
    try {
      kxy = pairwise_k(sx, sy, 1);
    } catch (const std::invalid_argument&) {
      txy = true;
    }
    try {
      kyx = pairwise_k(sy, sx, 1);
    } catch (const std::invalid_argument&) {
      tyx = true;
    }
    CHECK(txy == tyx);
    if (!txy) CHECK(kxy == kyx);
  }
}

TEST_CASE("standard diagrams verify with the expected invariants") {
  SUBCASE("cp2") {
    for (bool positive : {true, false}) {
      TrisectionReport r = validate_trisection(cp2_diagram(positive));
      CHECK(r.ok());
      CHECK(r.k12 == 0);
      CHECK(r.k23 == 0);
      CHECK(r.k31 == 0);
      CHECK(r.euler == 3);
      CHECK(r.width_entry == 1);
    }
  }
  SUBCASE("s1xs3") {
    TrisectionReport r = validate_trisection(s1xs3_diagram());
    CHECK(r.ok());
    CHECK(r.k12 == 1);
    CHECK(r.k23 == 1);
    CHECK(r.k31 == 1);
    CHECK(r.euler == 0);
    CHECK(r.width_entry == 1);
  }
  SUBCASE("s4") {
    TrisectionReport r = validate_trisection(s4_diagram());
    CHECK(r.ok());
    CHECK(r.euler == 2);
    CHECK(r.width_entry == 0);
  }
  SUBCASE("declared k mismatch is a diagnostic") {
    TrisectionDiagram d = cp2_diagram(true);
    d.declared_k = {{1, 0, 0}};
    CHECK_FALSE(validate_trisection(d).ok());
  }
}

TEST_CASE("standard position check") {
  SUBCASE("g=1, k=1: equal systems, empty dual link") {
    TrisectionDiagram d = s1xs3_diagram();
    d.geom_ga = mat({{0}});
    auto r = standard_position_check(d, 1);
    CHECK(r.ok);
    CHECK(r.dual_link.empty());
  }
  SUBCASE("g=1, k=0: one dual curve") {
    TrisectionDiagram d = cp2_diagram(true);
    d.gamma = system_of({{0, 1}});
    d.geom_ga = mat({{1}});
    auto r = standard_position_check(d, 0);
    CHECK(r.ok);
    REQUIRE(r.dual_link.size() == 1);
    CHECK(r.dual_link[0] == "gamma1");
  }
  SUBCASE("fails on an off-diagonal or non-unit entry") {
    TrisectionDiagram d;
    d.genus = 2;
    d.alpha = system_of({{1, 0, 0, 0}, {0, 0, 1, 0}});  // a1, a2
    d.beta = system_of({{0, 1, 0, 0}, {0, 0, 0, 1}});   // b1, b2
    d.gamma = system_of({{0, 1, 0, 0}, {0, 0, 0, 1}});
    d.geom_ga = mat({{1, 0}, {0, 2}});
    auto r = standard_position_check(d, 0);
    CHECK_FALSE(r.ok);
  }
  SUBCASE("needs the geometric matrix") {
    CHECK_THROWS_WITH_AS(standard_position_check(cp2_diagram(true), 0),
                         "geometric intersections required",
                         std::invalid_argument);
  }
}

TEST_CASE("connected sums") {
  SUBCASE("cp2 # cp2") {
    TrisectionDiagram d = connected_sum(cp2_diagram(true), cp2_diagram(true));
    TrisectionReport r = validate_trisection(d);
    CHECK(r.ok());
    CHECK(d.genus == 2);
    CHECK(r.k12 == 0);
    CHECK(r.k23 == 0);
    CHECK(r.k31 == 0);
    CHECK(r.euler == 4);
  }
  SUBCASE("sum with s4 is the identity on the invariants") {
    TrisectionDiagram d = connected_sum(cp2_diagram(true), s4_diagram());
    TrisectionReport r = validate_trisection(d);
    CHECK(d.genus == 1);
    CHECK(r.euler == 3);
  }
  SUBCASE("s1xs3 # s1xs3") {
    TrisectionDiagram d = connected_sum(s1xs3_diagram(), s1xs3_diagram());
    TrisectionReport r = validate_trisection(d);
    CHECK(r.ok());
    CHECK(r.k12 == 2);
    CHECK(r.euler == -2);
  }
  SUBCASE("euler adds minus two across generator pairs") {
    std::vector<TrisectionDiagram> gens = {
        s4_diagram(), s1xs3_diagram(), cp2_diagram(true), cp2_diagram(false),
        sphere_bundle_double_diagram(true, 1, 0),
        sphere_bundle_double_diagram(false, 1, 1)};
    for (const auto& a : gens)
      for (const auto& b : gens) {
        auto ra = validate_trisection(a);
        auto rb = validate_trisection(b);
        auto rc = validate_trisection(connected_sum(a, b));
        REQUIRE(rc.ok());
        CHECK(*rc.euler == *ra.euler + *rb.euler - 2);
      }
  }
}

TEST_CASE("sphere bundle doubles") {
  SUBCASE("orientable invariants") {
    for (long long g = 1; g <= 4; ++g) {
      TrisectionDiagram d = sphere_bundle_double_diagram(true, g, 0);
      CHECK(d.genus == 2 * g + 2);
      TrisectionReport r = validate_trisection(d);
      REQUIRE(r.ok());
      CHECK(*r.euler == 4 - 4 * g);
      CHECK(*r.k12 + *r.k23 + *r.k31 == 6 * g);
    }
  }
  SUBCASE("nonorientable invariants") {
    for (long long g = 1; g <= 4; ++g) {
      TrisectionDiagram d = sphere_bundle_double_diagram(false, g, 1);
      CHECK(d.genus == g + 2);
      TrisectionReport r = validate_trisection(d);
      REQUIRE(r.ok());
      CHECK(*r.euler == 4 - 2 * g);
      CHECK(*r.k12 + *r.k23 + *r.k31 == 3 * g);
    }
  }
  SUBCASE("euler number does not move the invariants") {
    for (long long n : {-3LL, 0LL, 1LL, 7LL}) {
      TrisectionReport r =
          validate_trisection(sphere_bundle_double_diagram(true, 1, n));
      REQUIRE(r.ok());
      CHECK(*r.euler == 0);
    }
  }
  SUBCASE("closed-manifold H1 from all three systems") {
    // quotient of H1 of the surface by all curve classes
    auto h1_of = [](const TrisectionDiagram& d) {
      const std::size_t n = static_cast<std::size_t>(2 * d.genus);
      std::vector<const CutSystem*> systems = {&d.alpha, &d.beta, &d.gamma};
      std::size_t cols = 0;
      for (const auto* s : systems) cols += s->curves.size();
      IntegerMatrix m(n, cols);
      std::size_t c = 0;
      for (const auto* s : systems)
        for (const auto& curve : s->curves) {
          for (std::size_t r = 0; r < n; ++r)
            m.at(r, c) = to_mpz(curve.cls[r]);
          ++c;
        }
      return cokernel(m);
    };
    // T^2 x S^2 has H1 = Z^2; the twisted RP^2 bundle has Z/2
    CHECK(h1_of(sphere_bundle_double_diagram(true, 1, 0)) ==
          AbelianGroup{2, {}});
    CHECK(h1_of(sphere_bundle_double_diagram(false, 1, 1)) ==
          AbelianGroup{0, {mpz_class(2)}});
    CHECK(h1_of(sphere_bundle_double_diagram(false, 3, 2)) ==
          AbelianGroup{2, {mpz_class(2)}});
  }
}

TEST_CASE("width entry matches the simultaneous-attachment profile") {
  // attaching both 2-handles of the double at once takes 2g+1 tunnels, so
  // the single level sees a 2-component link of tunnel number 2g+1 and
  // contributes 2(2g+1)+1 = 4g+3; the genus-(2g+2) diagram contributes
  // 2(2g+2)-1, the same number
  for (long long g = 1; g <= 3; ++g) {
    TrisectionDiagram d = sphere_bundle_double_diagram(true, g, 0);
    TrisectionReport r = validate_trisection(d);
    const long long tunnels = 2 * g + 1;
    thin4::LevelComponent both_handles{2 * g, tunnels, 2};
    CHECK(r.width_entry == 4 * g + 3);
    CHECK(r.width_entry == thin4::component_complexity(both_handles));
  }
}

TEST_CASE("k range and generator sanity") {
  std::vector<TrisectionDiagram> gens = {
      s1xs3_diagram(), cp2_diagram(true),
      sphere_bundle_double_diagram(true, 2, 1),
      sphere_bundle_double_diagram(false, 2, 0)};
  for (const auto& d : gens) {
    TrisectionReport r = validate_trisection(d);
    REQUIRE(r.ok());
    for (auto k : {*r.k12, *r.k23, *r.k31}) {
      CHECK(k >= 0);
      CHECK(k <= d.genus);
    }
  }
}

TEST_CASE("symmetry action checks") {
  SUBCASE("-I is a universal period-2 action") {
    for (const auto& d :
         {cp2_diagram(true), s1xs3_diagram(),
          sphere_bundle_double_diagram(true, 1, 0)}) {
      const std::size_t n = static_cast<std::size_t>(2 * d.genus);
      IntegerMatrix neg(n, n);
      for (std::size_t i = 0; i < n; ++i) neg.at(i, i) = -1;
      SymmetryReport r = check_symmetry_action(d, neg, 2);
      CHECK(r.ok);
      CHECK(r.necessary_only);
    }
  }
  SUBCASE("swapping two tunnel handles preserves the genus-4 double") {
    // exchange the (a3,b3) and (a4,b4) coordinate pairs
    IntegerMatrix swap(8, 8);
    swap.at(0, 0) = swap.at(1, 1) = swap.at(2, 2) = swap.at(3, 3) = 1;
    swap.at(4, 6) = swap.at(5, 7) = swap.at(6, 4) = swap.at(7, 5) = 1;
    SymmetryReport r = check_symmetry_action(
        sphere_bundle_double_diagram(true, 1, 0), swap, 2);
    CHECK(r.ok);
  }
  SUBCASE("rotation fails alpha preservation on cp2") {
    SymmetryReport r =
        check_symmetry_action(cp2_diagram(true), mat({{0, -1}, {1, 0}}), 4);
    CHECK_FALSE(r.ok);
  }
  SUBCASE("non-symplectic matrix fails") {
    SymmetryReport r =
        check_symmetry_action(cp2_diagram(true), mat({{2, 0}, {0, 1}}), 2);
    CHECK_FALSE(r.ok);
  }
  SUBCASE("dimension mismatch throws") {
    CHECK_THROWS_AS(check_symmetry_action(cp2_diagram(true), mat({{1}}), 2),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        check_symmetry_action(cp2_diagram(true), mat({{1, 0}, {0, 1}}), 1),
        std::invalid_argument);
  }
}
