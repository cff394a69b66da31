#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace thin4 {

// Perfect matching on the 2b tangle endpoints {1, ..., 2b}; the abstraction
// of a trivial b-strand tangle in the 3-ball. Arcs are kept canonically:
// each pair (lo, hi), sorted by lo.
class Matching {
public:
  Matching(long long b, std::vector<std::pair<int, int>> pairs);

  long long b() const { return b_; }
  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
  int partner(int point) const;  // 1-based

  bool operator==(const Matching&) const = default;

private:
  long long b_ = 0;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<int> partner_;  // index 1..2b
};

// Link components of the union of two tangles with common endpoints:
// alternating cycles of the two matchings.
long long components_of_union(const Matching& m1, const Matching& m2);

// Quotient tangle data of a symmetric surface: three trivial tangles with
// shared endpoints. Triviality and the unlink condition on
// theta_gamma u theta_alpha are caller-certified flags; crossing data is
// carried opaquely for rendering only.
struct BridgeTrisection {
  Matching theta_alpha, theta_beta, theta_gamma;
  bool unlink_assertion = false;
  std::optional<std::string> crossings_json;

  long long b() const { return theta_alpha.b(); }
};

// Throws std::invalid_argument when the three matchings disagree on b.
void validate(const BridgeTrisection& bt);

struct BandedDiagram {
  Matching link_beta, link_gamma;
  std::vector<int> bands;  // indices into the canonical theta_alpha arcs
  std::optional<std::string> crossings_json;
};

// The saddle-level presentation of the knotted surface: keep the
// beta/gamma link, retain one alpha shadow arc per excess over the
// component count of theta_alpha u theta_gamma. Excision is deterministic:
// per component, the arc with the smallest minimum endpoint goes.
BandedDiagram banded_link(const BridgeTrisection& bt);

// Euler characteristic of the branch surface built from the tangles and the
// capping disks: 2b vertices, 3b edges, one disk per component, so F - b.
long long branch_surface_euler(const BridgeTrisection& bt);

struct BoundaryLinks {
  long long at_zero = 0;  // components of theta_alpha u theta_beta
  long long at_one = 0;   // components of theta_gamma u theta_beta
};

BoundaryLinks boundary_links(const BridgeTrisection& bt);

// chi of the p-fold cyclic cover branched along a set of chi_branch:
// p * chi_base - (p - 1) * chi_branch. Requires p >= 1.
long long branched_cover_euler(long long p, long long chi_base,
                               long long chi_branch);

// Fixed-set component count after a band surgery induced by an equivariant
// 1-handle: distinct components merge, a coherent self-band splits, an
// incoherent one preserves the count.
long long one_handle_fixed_set(long long components, long long c1, long long c2,
                               bool coherent);

}  // namespace thin4
