#include "thin4/trisection.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace thin4 {

namespace {

std::string describe(const std::vector<long long>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ')';
  return os.str();
}

mpz_class gcd_of(const std::vector<long long>& v) {
  mpz_class g = 0;
  for (long long x : v) {
    g = gcd(g, to_mpz(x));
  }
  return g;
}

IntegerMatrix class_matrix(const CutSystem& s, long long genus) {
  IntegerMatrix m(s.curves.size(), 2 * genus);
  for (std::size_t i = 0; i < s.curves.size(); ++i)
    for (std::size_t j = 0; j < s.curves[i].cls.size(); ++j)
      m.at(i, j) = to_mpz(s.curves[i].cls[j]);
  return m;
}

// Coordinates alternate a_i, b_i, so a genus block is a contiguous slice.
Curve shifted_curve(const Curve& c, long long old_g, long long new_g,
                    long long genus_offset) {
  Curve out;
  out.label = c.label;
  out.cls.assign(2 * new_g, 0);
  for (long long i = 0; i < 2 * old_g; ++i)
    out.cls[2 * genus_offset + i] = c.cls[i];
  return out;
}

std::optional<IntegerMatrix> block_sum(const std::optional<IntegerMatrix>& a,
                                       const std::optional<IntegerMatrix>& b) {
  if (!a || !b) return std::nullopt;
  IntegerMatrix out(a->rows() + b->rows(), a->cols() + b->cols());
  for (std::size_t r = 0; r < a->rows(); ++r)
    for (std::size_t c = 0; c < a->cols(); ++c) out.at(r, c) = a->at(r, c);
  for (std::size_t r = 0; r < b->rows(); ++r)
    for (std::size_t c = 0; c < b->cols(); ++c)
      out.at(a->rows() + r, a->cols() + c) = b->at(r, c);
  return out;
}

}  // namespace

mpz_class symplectic_pairing(const std::vector<long long>& x,
                             const std::vector<long long>& y) {
  if (x.size() != y.size() || x.size() % 2 != 0)
    throw std::invalid_argument("symplectic pairing dimension mismatch");
  const std::size_t g = x.size() / 2;
  mpz_class sum = 0;
  for (std::size_t i = 0; i < g; ++i) {
    sum += to_mpz(x[2 * i]) * to_mpz(y[2 * i + 1]);
    sum -= to_mpz(x[2 * i + 1]) * to_mpz(y[2 * i]);
  }
  return sum;
}

std::vector<std::string> validate_cut_system(const CutSystem& s,
                                             long long genus) {
  std::vector<std::string> problems;
  if (genus < 0) {
    problems.push_back("negative genus");
    return problems;
  }
  if (static_cast<long long>(s.curves.size()) != genus) {
    problems.push_back("expected " + std::to_string(genus) + " curves, got " +
                       std::to_string(s.curves.size()));
    return problems;
  }
  for (std::size_t i = 0; i < s.curves.size(); ++i) {
    if (static_cast<long long>(s.curves[i].cls.size()) != 2 * genus) {
      problems.push_back("curve " + std::to_string(i + 1) +
                         " has wrong class length");
      return problems;
    }
  }
  for (std::size_t i = 0; i < s.curves.size(); ++i) {
    if (gcd_of(s.curves[i].cls) != 1)
      problems.push_back("curve " + std::to_string(i + 1) + " " +
                         describe(s.curves[i].cls) + " is not primitive");
  }
  for (std::size_t i = 0; i < s.curves.size(); ++i)
    for (std::size_t j = i + 1; j < s.curves.size(); ++j) {
      mpz_class p = symplectic_pairing(s.curves[i].cls, s.curves[j].cls);
      if (p != 0)
        problems.push_back("curves " + std::to_string(i + 1) + " and " +
                           std::to_string(j + 1) + " pair to " + p.get_str() +
                           ", not 0");
    }
  if (problems.empty() && genus > 0) {
    SmithResult snf = smith_normal_form(class_matrix(s, genus));
    for (long long i = 0; i < genus; ++i) {
      if (snf.D.at(i, i) != 1) {
        problems.push_back(
            "classes do not span a rank-" + std::to_string(genus) +
            " direct summand (invariant factor " + snf.D.at(i, i).get_str() +
            ")");
        break;
      }
    }
  }
  return problems;
}

IntegerMatrix pairing_matrix(const CutSystem& s1, const CutSystem& s2,
                             long long genus) {
  IntegerMatrix p(s1.curves.size(), s2.curves.size());
  for (std::size_t i = 0; i < s1.curves.size(); ++i)
    for (std::size_t j = 0; j < s2.curves.size(); ++j)
      p.at(i, j) = symplectic_pairing(s1.curves[i].cls, s2.curves[j].cls);
  return p;
}

long long pairwise_k(const CutSystem& s1, const CutSystem& s2,
                     long long genus) {
  for (const auto* s : {&s1, &s2}) {
    auto problems = validate_cut_system(*s, genus);
    if (!problems.empty())
      throw std::invalid_argument("invalid cut system: " + problems.front());
  }
  AbelianGroup h1 = cokernel(pairing_matrix(s1, s2, genus));
  if (!h1.torsion_divisors.empty())
    throw std::invalid_argument(
        "not a #k S1xS2 diagram (torsion obstruction)");
  return h1.free_rank;
}

TrisectionReport validate_trisection(const TrisectionDiagram& d) {
  TrisectionReport r;
  r.genus = d.genus;
  r.width_entry = std::max(2 * d.genus - 1, 0LL);
  r.warnings.push_back(
      "homology-level check: necessary conditions only, not a proof of "
      "standardness");

  const char* names[3] = {"alpha", "beta", "gamma"};
  const CutSystem* systems[3] = {&d.alpha, &d.beta, &d.gamma};
  bool systems_ok = true;
  for (int i = 0; i < 3; ++i) {
    for (const auto& p : validate_cut_system(*systems[i], d.genus)) {
      r.diagnostics.push_back(std::string(names[i]) + ": " + p);
      systems_ok = false;
    }
  }
  if (!systems_ok) return r;

  auto run_pair = [&](int i, int j) -> std::optional<long long> {
    try {
      return pairwise_k(*systems[i], *systems[j], d.genus);
    } catch (const std::invalid_argument& e) {
      r.diagnostics.push_back(std::string(names[i]) + "/" + names[j] + ": " +
                              e.what());
      return std::nullopt;
    }
  };
  r.k12 = run_pair(0, 1);
  r.k23 = run_pair(1, 2);
  r.k31 = run_pair(2, 0);

  if (r.k12 && r.k23 && r.k31) {
    r.euler = 2 + d.genus - (*r.k12 + *r.k23 + *r.k31);
    if (d.declared_k) {
      const auto& dk = *d.declared_k;
      if (dk[0] != *r.k12 || dk[1] != *r.k23 || dk[2] != *r.k31)
        r.diagnostics.push_back(
            "declared k (" + std::to_string(dk[0]) + "," +
            std::to_string(dk[1]) + "," + std::to_string(dk[2]) +
            ") does not match computed (" + std::to_string(*r.k12) + "," +
            std::to_string(*r.k23) + "," + std::to_string(*r.k31) + ")");
    }
  }
  return r;
}

StandardPositionResult standard_position_check(const TrisectionDiagram& d,
                                               long long k) {
  StandardPositionResult out;
  if (!d.geom_ga) throw std::invalid_argument("geometric intersections required");
  if (k < 0 || k > d.genus) {
    out.diagnostics.push_back("k out of range");
    return out;
  }
  const IntegerMatrix& g = *d.geom_ga;
  if (g.rows() != static_cast<std::size_t>(d.genus) ||
      g.cols() != static_cast<std::size_t>(d.genus)) {
    out.diagnostics.push_back("gamma/alpha geometric matrix has wrong shape");
    return out;
  }
  if (static_cast<long long>(d.alpha.curves.size()) != d.genus ||
      static_cast<long long>(d.gamma.curves.size()) != d.genus) {
    out.diagnostics.push_back("cut systems do not match the genus");
    return out;
  }
  for (long long l = 0; l < k; ++l) {
    if (!(d.alpha.curves[l] == d.gamma.curves[l]))
      out.diagnostics.push_back("alpha_" + std::to_string(l + 1) +
                                " != gamma_" + std::to_string(l + 1));
  }
  for (long long i = k; i < d.genus; ++i)
    for (long long j = k; j < d.genus; ++j) {
      const mpz_class want = (i == j) ? 1 : 0;
      if (g.at(i, j) != want)
        out.diagnostics.push_back(
            "geometric intersection gamma_" + std::to_string(i + 1) +
            " with alpha_" + std::to_string(j + 1) + " is " +
            g.at(i, j).get_str() + ", expected " + want.get_str());
    }
  out.ok = out.diagnostics.empty();
  if (out.ok) {
    for (long long i = k; i < d.genus; ++i) {
      const auto& label = d.gamma.curves[i].label;
      out.dual_link.push_back(label.empty() ? "gamma" + std::to_string(i + 1)
                                            : label);
    }
  }
  return out;
}

TrisectionDiagram connected_sum(const TrisectionDiagram& d1,
                                const TrisectionDiagram& d2) {
  for (const auto* d : {&d1, &d2}) {
    TrisectionReport r = validate_trisection(*d);
    if (!r.ok())
      throw std::invalid_argument("connected sum of invalid diagram: " +
                                  r.diagnostics.front());
  }
  TrisectionDiagram out;
  out.genus = d1.genus + d2.genus;
  auto embed = [&](const CutSystem& s1, const CutSystem& s2) {
    CutSystem s;
    for (const auto& c : s1.curves)
      s.curves.push_back(shifted_curve(c, d1.genus, out.genus, 0));
    for (const auto& c : s2.curves)
      s.curves.push_back(shifted_curve(c, d2.genus, out.genus, d1.genus));
    return s;
  };
  out.alpha = embed(d1.alpha, d2.alpha);
  out.beta = embed(d1.beta, d2.beta);
  out.gamma = embed(d1.gamma, d2.gamma);
  out.geom_ab = block_sum(d1.geom_ab, d2.geom_ab);
  out.geom_bg = block_sum(d1.geom_bg, d2.geom_bg);
  out.geom_ga = block_sum(d1.geom_ga, d2.geom_ga);
  if (d1.declared_k && d2.declared_k) {
    out.declared_k = {{(*d1.declared_k)[0] + (*d2.declared_k)[0],
                       (*d1.declared_k)[1] + (*d2.declared_k)[1],
                       (*d1.declared_k)[2] + (*d2.declared_k)[2]}};
  }
  return out;
}

namespace {

Curve make_curve(std::string label, std::vector<long long> cls) {
  Curve c;
  c.label = std::move(label);
  c.cls = std::move(cls);
  return c;
}

}  // namespace

TrisectionDiagram s4_diagram() {
  TrisectionDiagram d;
  d.genus = 0;
  d.declared_k = {{0, 0, 0}};
  return d;
}

TrisectionDiagram s1xs3_diagram() {
  TrisectionDiagram d;
  d.genus = 1;
  d.alpha.curves = {make_curve("alpha1", {1, 0})};
  d.beta.curves = {make_curve("beta1", {1, 0})};
  d.gamma.curves = {make_curve("gamma1", {1, 0})};
  d.declared_k = {{1, 1, 1}};
  return d;
}

TrisectionDiagram cp2_diagram(bool positive) {
  TrisectionDiagram d;
  d.genus = 1;
  d.alpha.curves = {make_curve("alpha1", {1, 0})};
  d.beta.curves = {make_curve("beta1", {0, 1})};
  d.gamma.curves = {make_curve("gamma1", {1, positive ? 1 : -1})};
  d.declared_k = {{0, 0, 0}};
  return d;
}

TrisectionDiagram sphere_bundle_double_diagram(bool orientable, long long g,
                                               long long n) {
  if (g < 1) throw std::invalid_argument("sphere bundle needs genus >= 1");
  const long long G = orientable ? 2 * g + 2 : g + 2;
  TrisectionDiagram d;
  d.genus = G;

  auto a_vec = [&](long long i) {  // a_i, 1-based
    std::vector<long long> v(2 * G, 0);
    v[2 * (i - 1)] = 1;
    return v;
  };
  auto b_vec = [&](long long i) {
    std::vector<long long> v(2 * G, 0);
    v[2 * (i - 1) + 1] = 1;
    return v;
  };

  // alpha: meridians of the tangle handlebody; handles 1 and 2 carry the
  // two surgery curves (the bundle 2-handle and its 0-framed meridian),
  // handles 3..G the tunnels.
  for (long long i = 1; i <= G; ++i)
    d.alpha.curves.push_back(make_curve("alpha" + std::to_string(i), a_vec(i)));

  // beta: the complement handlebody. The longitudes of the surgered handles
  // compress; in the nonorientable case the bundle curve runs twice over
  // every 1-handle, so its longitude compresses only against twice the sum
  // of the tunnel longitudes, and the tunnel-side curves pick up 2*a_1.
  {
    std::vector<long long> beta1 = b_vec(1);
    if (!orientable)
      for (long long j = 3; j <= G; ++j) beta1[2 * (j - 1) + 1] = -2;
    d.beta.curves.push_back(make_curve("beta1", std::move(beta1)));
    d.beta.curves.push_back(make_curve("beta2", b_vec(2)));
    for (long long j = 3; j <= G; ++j) {
      std::vector<long long> v = a_vec(j);
      if (!orientable) v[0] = 2;
      d.beta.curves.push_back(make_curve("beta" + std::to_string(j), std::move(v)));
    }
  }

  // gamma: meridians of the surgered handlebody; framed longitudes for the
  // two surgery curves (linking number 1 between them), untouched meridians
  // for the tunnels.
  {
    std::vector<long long> gamma1 = b_vec(1);
    gamma1[0] = n;  // framing twist on a_1
    gamma1[2] = 1;  // links its meridian once: a_2 coefficient
    std::vector<long long> gamma2 = b_vec(2);
    gamma2[0] = 1;  // 0-framed meridian, links the bundle handle once
    d.gamma.curves.push_back(make_curve("gamma1", std::move(gamma1)));
    d.gamma.curves.push_back(make_curve("gamma2", std::move(gamma2)));
    for (long long j = 3; j <= G; ++j)
      d.gamma.curves.push_back(
          make_curve("gamma" + std::to_string(j), a_vec(j)));
  }

  const long long k = G - 2;  // 2g resp. g, for all three pairs
  d.declared_k = {{k, k, k}};
  return d;
}

SymmetryReport check_symmetry_action(const TrisectionDiagram& d,
                                     const IntegerMatrix& action,
                                     long long period) {
  if (period < 2) throw std::invalid_argument("period must be at least 2");
  const std::size_t n = static_cast<std::size_t>(2 * d.genus);
  if (action.rows() != n || action.cols() != n)
    throw std::invalid_argument("action matrix dimension mismatch");

  SymmetryReport out;
  out.necessary_only = true;

  // J in the fixed basis (coordinates alternate a_i, b_i)
  IntegerMatrix j(n, n);
  for (long long i = 0; i < d.genus; ++i) {
    j.at(2 * i, 2 * i + 1) = 1;
    j.at(2 * i + 1, 2 * i) = -1;
  }

  IntegerMatrix mjm = action.transposed() * j * action;
  IntegerMatrix neg_j(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) neg_j.at(r, c) = -j.at(r, c);
  if (!(mjm == j) && !(mjm == neg_j))
    out.diagnostics.push_back(
        "action does not preserve the intersection form up to sign");

  IntegerMatrix power = IntegerMatrix::identity(n);
  for (long long i = 0; i < period; ++i) power = power * action;
  IntegerMatrix id = IntegerMatrix::identity(n);
  IntegerMatrix neg_id(n, n);
  for (std::size_t r = 0; r < n; ++r) neg_id.at(r, r) = -1;
  if (!(power == id) && !(power == neg_id))
    out.diagnostics.push_back("action^p is not +-identity");

  const char* names[3] = {"alpha", "beta", "gamma"};
  const CutSystem* systems[3] = {&d.alpha, &d.beta, &d.gamma};
  for (int s = 0; s < 3; ++s) {
    if (systems[s]->curves.empty()) continue;
    // span matrix: classes as columns
    IntegerMatrix span(n, systems[s]->curves.size());
    for (std::size_t c = 0; c < systems[s]->curves.size(); ++c) {
      if (systems[s]->curves[c].cls.size() != n) {
        out.diagnostics.push_back(std::string(names[s]) +
                                  " has a class of the wrong length");
        return out;
      }
      for (std::size_t r = 0; r < n; ++r)
        span.at(r, c) = to_mpz(systems[s]->curves[c].cls[r]);
    }
    for (std::size_t c = 0; c < systems[s]->curves.size(); ++c) {
      std::vector<mpz_class> image(n, 0);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k2 = 0; k2 < n; ++k2)
          image[r] += action.at(r, k2) * to_mpz(systems[s]->curves[c].cls[k2]);
      if (!integer_solvable(span, image)) {
        out.diagnostics.push_back(std::string(names[s]) + " span not preserved (curve " +
                                  std::to_string(c + 1) + ")");
        break;
      }
    }
  }

  out.ok = out.diagnostics.empty();
  return out;
}

}  // namespace thin4
