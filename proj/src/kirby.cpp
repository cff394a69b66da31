#include "thin4/kirby.hpp"

#include <set>
#include <stdexcept>

namespace thin4 {

void validate(const KirbyDiagram& d) {
  if (d.zero_handles < 1)
    throw std::invalid_argument("diagram needs at least one 0-handle");
  if (d.three_handles < 0 || d.four_handles < 0)
    throw std::invalid_argument("negative handle count");

  std::set<std::string> ones(d.one_handles.begin(), d.one_handles.end());
  if (ones.size() != d.one_handles.size())
    throw std::invalid_argument("duplicate 1-handle id");

  std::set<std::string> twos;
  for (const auto& h : d.two_handles)
    if (!twos.insert(h.id).second)
      throw std::invalid_argument("duplicate 2-handle id: " + h.id);

  auto lk = [&](const std::string& a, const std::string& b) -> long long {
    for (const auto& h : d.two_handles)
      if (h.id == a) {
        auto it = h.linking.find(b);
        return it == h.linking.end() ? 0 : it->second;
      }
    return 0;
  };

  for (const auto& h : d.two_handles) {
    for (const auto& [other, v] : h.linking) {
      if (other == h.id)
        throw std::invalid_argument("self-linking stored for " + h.id +
                                    "; the framing carries the diagonal");
      if (!twos.count(other))
        throw std::invalid_argument("linking references unknown 2-handle: " +
                                    other);
      if (lk(other, h.id) != v)
        throw std::invalid_argument("asymmetric linking between " + h.id +
                                    " and " + other);
    }
    for (const auto& [one, v] : h.run_through) {
      (void)v;
      if (!ones.count(one))
        throw std::invalid_argument("run_through references unknown 1-handle: " +
                                    one);
    }
  }
}

long long euler_characteristic(const KirbyDiagram& d) {
  validate(d);
  return d.zero_handles - static_cast<long long>(d.one_handles.size()) +
         static_cast<long long>(d.two_handles.size()) - d.three_handles +
         d.four_handles;
}

IntegerMatrix run_through_matrix(const KirbyDiagram& d) {
  IntegerMatrix m(d.one_handles.size(), d.two_handles.size());
  for (std::size_t j = 0; j < d.two_handles.size(); ++j) {
    const auto& rt = d.two_handles[j].run_through;
    for (std::size_t i = 0; i < d.one_handles.size(); ++i) {
      auto it = rt.find(d.one_handles[i]);
      if (it != rt.end()) m.at(i, j) = to_mpz(it->second);
    }
  }
  return m;
}

IntegerMatrix linking_matrix(const KirbyDiagram& d) {
  const std::size_t n = d.two_handles.size();
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m.at(i, i) = to_mpz(d.two_handles[i].framing);
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      auto it = d.two_handles[i].linking.find(d.two_handles[j].id);
      if (it != d.two_handles[i].linking.end()) m.at(i, j) = to_mpz(it->second);
    }
  }
  return m;
}

HandlebodyHomology homology_of_2handlebody(const KirbyDiagram& d) {
  validate(d);
  if (d.three_handles != 0 || d.four_handles != 0 || d.zero_handles != 1)
    throw std::invalid_argument("not a 2-handlebody");
  IntegerMatrix boundary2 = run_through_matrix(d);
  HandlebodyHomology h;
  h.h0.free_rank = 1;
  h.h1 = cokernel(boundary2);
  h.h2.free_rank = static_cast<long long>(d.two_handles.size()) -
                   static_cast<long long>(rank(boundary2));
  return h;
}

AbelianGroup boundary_first_homology(const KirbyDiagram& d) {
  validate(d);
  if (!d.one_handles.empty() || d.three_handles != 0 || d.four_handles != 0)
    throw std::invalid_argument(
        "boundary_first_homology needs a 1-handle-free trace of surgery");
  return cokernel(linking_matrix(d));
}

long long symmetric_signature(const IntegerMatrix& s) {
  if (s.rows() != s.cols())
    throw std::invalid_argument("signature of non-square matrix");
  const std::size_t n = s.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (s.at(i, j) != s.at(j, i))
        throw std::invalid_argument("signature of non-symmetric matrix");

  std::vector<mpq_class> m(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i * n + j] = mpq_class(s.at(i, j));
  auto at = [&](std::size_t i, std::size_t j) -> mpq_class& {
    return m[i * n + j];
  };

  long long pos = 0, neg = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t j = k + 1;
      while (j < n && at(k, j) == 0) ++j;
      if (j == n) continue;  // null row, contributes nothing
      // symmetric congruence making the pivot nonzero; if adding row/col j
      // cancels to zero, subtracting cannot
      const int dir = (2 * at(k, j) + at(j, j) != 0) ? 1 : -1;
      for (std::size_t c = k; c < n; ++c) at(k, c) += dir * at(j, c);
      for (std::size_t r = k; r < n; ++r) at(r, k) += dir * at(r, j);
    }
    const mpq_class pivot = at(k, k);
    if (pivot > 0)
      ++pos;
    else
      ++neg;
    // Schur complement of the pivot; keeps the trailing block symmetric
    for (std::size_t i = k + 1; i < n; ++i) {
      if (at(i, k) == 0) continue;
      const mpq_class f = at(i, k) / pivot;
      for (std::size_t j = k + 1; j < n; ++j) at(i, j) -= f * at(k, j);
    }
  }
  return pos - neg;
}

IntersectionForm intersection_form(const KirbyDiagram& d) {
  validate(d);
  if (!d.one_handles.empty())
    throw std::invalid_argument(
        "intersection form defined here only for 1-handle-free diagrams");
  IntersectionForm f;
  f.matrix = linking_matrix(d);
  f.signature = symmetric_signature(f.matrix);
  f.det = determinant(f.matrix);
  f.even = true;
  for (const auto& h : d.two_handles)
    if (h.framing % 2 != 0) f.even = false;
  return f;
}

KirbyDiagram linear_plumbing(std::span<const long long> framings) {
  if (framings.empty())
    throw std::invalid_argument("linear plumbing needs at least one framing");
  KirbyDiagram d;
  for (std::size_t i = 0; i < framings.size(); ++i) {
    TwoHandle h;
    h.id = "h" + std::to_string(i + 1);
    h.framing = framings[i];
    if (i > 0) h.linking["h" + std::to_string(i)] = 1;
    if (i + 1 < framings.size()) h.linking["h" + std::to_string(i + 2)] = 1;
    d.two_handles.push_back(std::move(h));
  }
  return d;
}

KirbyDiagram disk_bundle(bool orientable, long long g, long long n) {
  if (g < 1) throw std::invalid_argument("disk bundle needs genus >= 1");
  KirbyDiagram d;
  const long long ones = orientable ? 2 * g : g;
  for (long long i = 1; i <= ones; ++i)
    d.one_handles.push_back("x" + std::to_string(i));
  TwoHandle h;
  h.id = "h1";
  h.framing = n;
  for (const auto& one : d.one_handles) h.run_through[one] = orientable ? 0 : 2;
  d.two_handles.push_back(std::move(h));
  return d;
}

KirbyDiagram doubled(const KirbyDiagram& d) {
  validate(d);
  if (d.three_handles != 0 || d.four_handles != 0 || d.zero_handles != 1)
    throw std::invalid_argument(
        "doubling needs a diagram with one 0-handle and no 3-/4-handles");
  KirbyDiagram out = d;
  const std::size_t originals = d.two_handles.size();
  for (std::size_t i = 0; i < originals; ++i) {
    const std::string mid = d.two_handles[i].id + "_m";
    out.two_handles[i].linking[mid] = 1;
    TwoHandle meridian;
    meridian.id = mid;
    meridian.framing = 0;
    meridian.linking[d.two_handles[i].id] = 1;
    out.two_handles.push_back(std::move(meridian));
  }
  out.three_handles = static_cast<long long>(d.one_handles.size());
  out.four_handles = 1;
  validate(out);  // meridian ids could collide with caller-chosen ids
  return out;
}

}  // namespace thin4
