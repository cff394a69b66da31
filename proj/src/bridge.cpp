#include "thin4/bridge.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace thin4 {

Matching::Matching(long long b, std::vector<std::pair<int, int>> pairs)
    : b_(b), pairs_(std::move(pairs)) {
  if (b_ < 1) throw std::invalid_argument("bridge number must be positive");
  if (static_cast<long long>(pairs_.size()) != b_)
    throw std::invalid_argument("matching needs exactly b arcs");
  partner_.assign(2 * b_ + 1, 0);
  for (auto& [x, y] : pairs_) {
    if (x > y) std::swap(x, y);
    for (int p : {x, y}) {
      if (p < 1 || p > 2 * b_)
        throw std::invalid_argument("matching point out of range: " +
                                    std::to_string(p));
      if (partner_[p] != 0)
        throw std::invalid_argument("point matched twice: " + std::to_string(p));
    }
    if (x == y)
      throw std::invalid_argument("arc cannot join a point to itself");
    partner_[x] = y;
    partner_[y] = x;
  }
  std::sort(pairs_.begin(), pairs_.end());
}

int Matching::partner(int point) const {
  if (point < 1 || point > 2 * b_)
    throw std::invalid_argument("point out of range");
  return partner_[point];
}

long long components_of_union(const Matching& m1, const Matching& m2) {
  if (m1.b() != m2.b())
    throw std::invalid_argument("matchings have different bridge numbers");
  std::vector<bool> visited(2 * m1.b() + 1, false);
  long long components = 0;
  for (int p = 1; p <= 2 * m1.b(); ++p) {
    if (visited[p]) continue;
    ++components;
    int cur = p;
    do {
      visited[cur] = true;
      int q = m1.partner(cur);
      visited[q] = true;
      cur = m2.partner(q);
    } while (cur != p);
  }
  return components;
}

void validate(const BridgeTrisection& bt) {
  if (bt.theta_alpha.b() != bt.theta_beta.b() ||
      bt.theta_alpha.b() != bt.theta_gamma.b())
    throw std::invalid_argument("tangles have different bridge numbers");
}

namespace {

// component id of every point in theta_alpha u theta_gamma, ids in order of
// first appearance
std::vector<int> component_labels(const Matching& alpha, const Matching& gamma) {
  std::vector<int> label(2 * alpha.b() + 1, -1);
  int next = 0;
  for (int p = 1; p <= 2 * alpha.b(); ++p) {
    if (label[p] != -1) continue;
    int cur = p;
    do {
      label[cur] = next;
      int q = alpha.partner(cur);
      label[q] = next;
      cur = gamma.partner(q);
    } while (cur != p);
    ++next;
  }
  return label;
}

}  // namespace

BandedDiagram banded_link(const BridgeTrisection& bt) {
  validate(bt);
  if (!bt.unlink_assertion)
    throw std::invalid_argument("quotient data not certified");

  const auto label = component_labels(bt.theta_alpha, bt.theta_gamma);
  // canonical arcs are sorted by minimum endpoint, so the first arc seen per
  // component is the one to excise
  std::map<int, std::size_t> excised;
  for (std::size_t i = 0; i < bt.theta_alpha.pairs().size(); ++i) {
    const int comp = label[bt.theta_alpha.pairs()[i].first];
    excised.emplace(comp, i);
  }
  BandedDiagram out{bt.theta_beta, bt.theta_gamma, {}, bt.crossings_json};
  for (std::size_t i = 0; i < bt.theta_alpha.pairs().size(); ++i) {
    const int comp = label[bt.theta_alpha.pairs()[i].first];
    if (excised.at(comp) != i) out.bands.push_back(static_cast<int>(i));
  }
  return out;
}

long long branch_surface_euler(const BridgeTrisection& bt) {
  validate(bt);
  if (!bt.unlink_assertion)
    throw std::invalid_argument("quotient data not certified");
  const long long b = bt.b();
  const long long f = components_of_union(bt.theta_alpha, bt.theta_gamma);
  return 2 * b - 3 * b + f;
}

BoundaryLinks boundary_links(const BridgeTrisection& bt) {
  validate(bt);
  return BoundaryLinks{
      components_of_union(bt.theta_alpha, bt.theta_beta),
      components_of_union(bt.theta_gamma, bt.theta_beta),
  };
}

long long branched_cover_euler(long long p, long long chi_base,
                               long long chi_branch) {
  if (p < 1) throw std::invalid_argument("cover degree must be at least 1");
  return p * chi_base - (p - 1) * chi_branch;
}

long long one_handle_fixed_set(long long components, long long c1, long long c2,
                               bool coherent) {
  if (components < 1)
    throw std::invalid_argument("fixed set needs at least one component");
  if (c1 < 1 || c1 > components || c2 < 1 || c2 > components)
    throw std::invalid_argument("invalid component id");
  if (c1 != c2) return components - 1;
  return coherent ? components + 1 : components;
}

}  // namespace thin4
