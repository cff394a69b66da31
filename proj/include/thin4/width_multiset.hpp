#pragma once

#include <span>
#include <string>
#include <vector>

namespace thin4 {

enum class Ordering { less, equal, greater };

std::string to_string(Ordering o);

// Finite multiset of nonnegative integers, stored canonically as a
// non-increasing vector. The order used throughout is decreasing-lexicographic
// with zero padding on the shorter operand, so dropping an entry strictly
// decreases the value.
class WidthMultiset {
public:
  WidthMultiset() = default;
  // Sorts into canonical form; rejects negative entries.
  explicit WidthMultiset(std::vector<long long> entries);

  const std::vector<long long>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }

  bool operator==(const WidthMultiset&) const = default;

private:
  std::vector<long long> entries_;
};

Ordering compare(const WidthMultiset& a, const WidthMultiset& b);

// Multiset union: multiplicities add.
WidthMultiset multiset_union(const WidthMultiset& a, const WidthMultiset& b);

// Minimum under compare; the first occurrence wins ties.
// Throws std::invalid_argument("empty candidate set") on an empty list.
const WidthMultiset& min_of(std::span<const WidthMultiset> candidates);

// Width entries of non-empty decompositions are expected to be odd; even
// entries do occur for disconnected levels and are only worth a warning.
// Returns the even entries present, in canonical order.
std::vector<long long> even_entries(const WidthMultiset& w);

std::string to_string(const WidthMultiset& w);

}  // namespace thin4
