#include "thin4/width_multiset.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace thin4 {

std::string to_string(Ordering o) {
  switch (o) {
    case Ordering::less: return "less";
    case Ordering::equal: return "equal";
    case Ordering::greater: return "greater";
  }
  return "?";
}

WidthMultiset::WidthMultiset(std::vector<long long> entries)
    : entries_(std::move(entries)) {
  for (long long e : entries_) {
    if (e < 0) throw std::invalid_argument("width entries must be nonnegative");
  }
  std::sort(entries_.begin(), entries_.end(), std::greater<>());
}

Ordering compare(const WidthMultiset& a, const WidthMultiset& b) {
  const auto& x = a.entries();
  const auto& y = b.entries();
  const std::size_t n = std::max(x.size(), y.size());
  for (std::size_t i = 0; i < n; ++i) {
    const long long xi = i < x.size() ? x[i] : 0;
    const long long yi = i < y.size() ? y[i] : 0;
    if (xi < yi) return Ordering::less;
    if (xi > yi) return Ordering::greater;
  }
  return Ordering::equal;
}

WidthMultiset multiset_union(const WidthMultiset& a, const WidthMultiset& b) {
  std::vector<long long> merged;
  merged.reserve(a.size() + b.size());
  std::merge(a.entries().begin(), a.entries().end(), b.entries().begin(),
             b.entries().end(), std::back_inserter(merged), std::greater<>());
  return WidthMultiset(std::move(merged));
}

const WidthMultiset& min_of(std::span<const WidthMultiset> candidates) {
  if (candidates.empty()) throw std::invalid_argument("empty candidate set");
  const WidthMultiset* best = &candidates[0];
  for (const auto& c : candidates.subspan(1)) {
    if (compare(c, *best) == Ordering::less) best = &c;
  }
  return *best;
}

std::vector<long long> even_entries(const WidthMultiset& w) {
  std::vector<long long> out;
  for (long long e : w.entries()) {
    if (e % 2 == 0) out.push_back(e);
  }
  return out;
}

std::string to_string(const WidthMultiset& w) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << ',';
    os << w.entries()[i];
  }
  os << '}';
  return os.str();
}

}  // namespace thin4
