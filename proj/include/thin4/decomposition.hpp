#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "thin4/width_multiset.hpp"

namespace thin4 {

// One connected component of a level 3-manifold, carrying just enough data to
// evaluate complexity: its Heegaard genus, and the tunnel number of the part
// of the attaching link it contains (absent when the component carries no
// link). Genera and tunnel numbers are supplied, never computed; the standard
// generators ship certified values.
struct LevelComponent {
  long long heegaard_genus = 0;
  std::optional<long long> tunnel_number;  // present iff link_size > 0
  long long link_size = 0;

  bool operator==(const LevelComponent&) const = default;
};

struct Level {
  long long one_handles = 0;
  std::vector<LevelComponent> components;  // nonempty
  long long three_handles = 0;

  bool operator==(const Level&) const = default;
};

struct DecompositionProfile {
  std::string label;
  std::vector<Level> levels;  // may be empty (the two-ball decomposition)

  bool operator==(const DecompositionProfile&) const = default;
};

// Throw std::invalid_argument on violated invariants.
void validate(const LevelComponent& c);
void validate(const Level& l);
void validate(const DecompositionProfile& p);

// 2t+1 on linked components, max(2*HG-1, 0) on empty ones.
long long component_complexity(const LevelComponent& c);

// Sum of component complexities.
long long level_complexity(const Level& l);

// Multiset of level complexities.
WidthMultiset width_of(const DecompositionProfile& p);

// Upside-down decomposition: level order reversed, 1-handle and 3-handle
// counts swapped within each level. Component data rides along unchanged,
// which is exactly what keeps the width invariant.
DecompositionProfile reversed(const DecompositionProfile& p);

// Tunnel number of a split union of links under connected sum.
// Both links present: t1 + t2 + 1. One present: that tunnel number plus the
// Heegaard genus of the other summand. Neither: error "no link on either
// side".
long long tunnel_split_union(std::optional<long long> t1,
                             std::optional<long long> t2, long long hg1,
                             long long hg2);

// Caller-certified data for splitting a level along a separating sphere:
// Y* = A # B with the link split as L = L_A u L_B.
struct SplitData {
  long long hg_b = 0;           // HG(B)
  long long t_b = 0;            // t_B(L_B)
  long long hg_a_surgered = 0;  // HG(A[L_A])
  long long t_a = 0;            // t_A(L_A)
};

struct SplitResult {
  DecompositionProfile profile;
  long long c_new_a = 0;
  long long c_new_b = 0;
};

// Replaces level `index` by two levels of complexity
//   c_A = c_i + 2*(HG(B) - t_B)   and   c_B = c_i + 2*(HG(A[L_A]) - t_A),
// attaching the A-side handles first. The replacement levels are synthetic
// realizations of those complexities; only the width identity
// width(new) = width(old) \ {c_i} u {c_A, c_B} is contractual.
SplitResult split_level(const DecompositionProfile& p, std::size_t index,
                        const SplitData& data);

// Merges level `index` (which must carry no 2- or 3-handles) into the next
// level, pooling the 1-handles. Drops one occurrence of c_i from the width.
DecompositionProfile merge_levels(const DecompositionProfile& p,
                                  std::size_t index);

// Levels of `left` followed by the levels of reversed(right); the width of
// the result is the union of the two widths.
DecompositionProfile concat_with_reversed(const DecompositionProfile& left,
                                          const DecompositionProfile& right);

}  // namespace thin4
