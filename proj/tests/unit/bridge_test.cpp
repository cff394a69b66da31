#include <doctest.h>

#include <fstream>
#include <sstream>

#include "support/oracles.hpp"
#include "thin4/bridge.hpp"
#include "thin4/json_io.hpp"

using namespace thin4;

namespace {

Matching m(long long b, std::vector<std::pair<int, int>> pairs) {
  return Matching(b, std::move(pairs));
}

BridgeTrisection bt(Matching alpha, Matching beta, Matching gamma,
                    bool unlink = true) {
  return BridgeTrisection{std::move(alpha), std::move(beta), std::move(gamma),
                          unlink, std::nullopt};
}

}  // namespace

TEST_CASE("matching construction") {
  Matching x = m(2, {{3, 4}, {2, 1}});
  CHECK(x.pairs() == std::vector<std::pair<int, int>>{{1, 2}, {3, 4}});
  CHECK(x.partner(3) == 4);
  CHECK_THROWS_AS(m(2, {{1, 2}}), std::invalid_argument);          // wrong size
  CHECK_THROWS_AS(m(2, {{1, 2}, {2, 3}}), std::invalid_argument);  // reuse
  CHECK_THROWS_AS(m(2, {{1, 2}, {3, 5}}), std::invalid_argument);  // range
  CHECK_THROWS_AS(m(1, {{1, 1}}), std::invalid_argument);          // loop
}

TEST_CASE("components of unions") {
  CHECK(components_of_union(m(2, {{1, 2}, {3, 4}}), m(2, {{2, 3}, {4, 1}})) ==
        1);
  Matching x = m(3, {{1, 4}, {2, 5}, {3, 6}});
  CHECK(components_of_union(x, x) == 3);
  CHECK(components_of_union(m(3, {{1, 2}, {3, 4}, {5, 6}}),
                            m(3, {{1, 2}, {3, 6}, {4, 5}})) == 2);
  CHECK_THROWS_AS(
      components_of_union(m(1, {{1, 2}}), m(2, {{1, 2}, {3, 4}})),
      std::invalid_argument);
}

TEST_CASE("components against the union-find oracle, exhaustive b <= 4") {
  for (int b = 1; b <= 4; ++b) {
    const auto all = oracles::all_matchings(b);
    for (const auto& p1 : all)
      for (const auto& p2 : all) {
        Matching m1(b, p1), m2(b, p2);
        const long long got = components_of_union(m1, m2);
        CHECK(got == oracles::union_components(p1, p2, 2 * b));
        CHECK(got >= 1);
        CHECK(got <= b);
        CHECK((got == b) == (m1 == m2));
      }
  }
}

TEST_CASE("banded link extraction") {
  SUBCASE("b = 1: the only shadow is always excised") {
    auto out = banded_link(
        bt(m(1, {{1, 2}}), m(1, {{1, 2}}), m(1, {{1, 2}})));
    CHECK(out.bands.empty());
    CHECK(out.link_beta == m(1, {{1, 2}}));
    CHECK(out.link_gamma == m(1, {{1, 2}}));
  }
  SUBCASE("b = 2, one component: the arc at the lowest endpoint goes") {
    auto out = banded_link(
        bt(m(2, {{1, 2}, {3, 4}}), m(2, {{1, 3}, {2, 4}}),
           m(2, {{2, 3}, {4, 1}})));
    // component contains both alpha arcs; (1,2) is excised, (3,4) retained
    CHECK(out.bands == std::vector<int>{1});
  }
  SUBCASE("b = 2, equal tangles: two components, nothing retained") {
    Matching x = m(2, {{1, 2}, {3, 4}});
    auto out = banded_link(bt(x, x, x));
    CHECK(out.bands.empty());
  }
  SUBCASE("uncertified data is rejected") {
    CHECK_THROWS_WITH_AS(
        banded_link(bt(m(1, {{1, 2}}), m(1, {{1, 2}}), m(1, {{1, 2}}), false)),
        "quotient data not certified", std::invalid_argument);
  }
  SUBCASE("band count identity |bands| + F = b, exhaustive b <= 4") {
    for (int b = 1; b <= 4; ++b) {
      const auto all = oracles::all_matchings(b);
      const Matching beta(b, all.front());
      for (const auto& pa : all)
        for (const auto& pg : all) {
          Matching alpha(b, pa), gamma(b, pg);
          const auto out = banded_link(bt(alpha, beta, gamma));
          CHECK(static_cast<long long>(out.bands.size()) +
                    components_of_union(alpha, gamma) ==
                b);
        }
    }
  }
  SUBCASE("determinism") {
    auto a = bt(m(3, {{1, 2}, {3, 4}, {5, 6}}), m(3, {{1, 4}, {2, 5}, {3, 6}}),
                m(3, {{2, 3}, {4, 5}, {6, 1}}));
    CHECK(banded_link(a).bands == banded_link(a).bands);
  }
}

TEST_CASE("branch surface euler characteristic") {
  CHECK(branch_surface_euler(bt(m(1, {{1, 2}}), m(1, {{1, 2}}),
                                m(1, {{1, 2}}))) == 0);
  // F = b gives chi 0 (annuli/Mobius bands only)
  Matching x = m(2, {{1, 3}, {2, 4}});
  CHECK(branch_surface_euler(bt(x, x, x)) == 0);
  CHECK(branch_surface_euler(bt(m(2, {{1, 2}, {3, 4}}), x,
                                m(2, {{2, 3}, {4, 1}}))) == -1);

  SUBCASE("agrees with the CW oracle, exhaustive b <= 4") {
    for (int b = 1; b <= 4; ++b) {
      const auto all = oracles::all_matchings(b);
      const Matching beta(b, all.front());
      for (const auto& pa : all)
        for (const auto& pg : all) {
          const long long chi =
              branch_surface_euler(bt(Matching(b, pa), beta, Matching(b, pg)));
          CHECK(chi ==
                oracles::cw_branch_surface_euler(pa, all.front(), pg, b));
          CHECK(chi <= 0);
        }
    }
  }
}

TEST_CASE("boundary links") {
  Matching x = m(2, {{1, 2}, {3, 4}});
  auto eq = boundary_links(bt(x, x, x));
  CHECK(eq.at_zero == 2);
  CHECK(eq.at_one == 2);

  auto one = boundary_links(bt(m(1, {{1, 2}}), m(1, {{1, 2}}), m(1, {{1, 2}})));
  CHECK(one.at_zero == 1);
  CHECK(one.at_one == 1);

  // asymmetric data distinguishes the two ends
  auto mix = boundary_links(bt(x, x, m(2, {{1, 3}, {2, 4}})));
  CHECK(mix.at_zero == 2);
  CHECK(mix.at_one == 1);
}

TEST_CASE("branched cover euler characteristic") {
  CHECK(branched_cover_euler(1, 7, 3) == 7);
  CHECK(branched_cover_euler(2, 1, 1) == 1);  // double of B4 over a disk
  CHECK(branched_cover_euler(2, 1, 0) == 2);  // double of B4 over an annulus
  for (long long p = 1; p <= 5; ++p)
    CHECK(branched_cover_euler(p, 0, 4) == -(p - 1) * 4);
  CHECK_THROWS_AS(branched_cover_euler(0, 1, 1), std::invalid_argument);
}

TEST_CASE("poincare trace fixture: annulus with a Hopf-link end") {
  std::ifstream in(std::string(THIN4_DATA_DIR) + "/bridge/poincare.json");
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  auto data = thin4::bridge_from_json(thin4::json::parse(os.str()));

  CHECK(branch_surface_euler(data) == 0);  // annulus
  CHECK(boundary_links(data).at_one == 2);  // Hopf link has two components
  CHECK(banded_link(data).bands.empty());
  // the trace itself: one 0-handle and one 2-handle upstairs
  CHECK(branched_cover_euler(2, 1, branch_surface_euler(data)) == 2);
}

TEST_CASE("equivariant 1-handle fixed-set bookkeeping") {
  CHECK(one_handle_fixed_set(2, 1, 2, false) == 1);
  CHECK(one_handle_fixed_set(2, 1, 2, true) == 1);
  CHECK(one_handle_fixed_set(1, 1, 1, true) == 2);
  CHECK(one_handle_fixed_set(1, 1, 1, false) == 1);
  CHECK_THROWS_AS(one_handle_fixed_set(2, 0, 1, true), std::invalid_argument);
  CHECK_THROWS_AS(one_handle_fixed_set(2, 1, 3, true), std::invalid_argument);
}
