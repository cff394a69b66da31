#include "thin4/decomposition.hpp"

#include <algorithm>
#include <stdexcept>

namespace thin4 {

void validate(const LevelComponent& c) {
  if (c.heegaard_genus < 0 || c.link_size < 0)
    throw std::invalid_argument("negative count in level component");
  if (c.tunnel_number.has_value() && *c.tunnel_number < 0)
    throw std::invalid_argument("negative tunnel number");
  if (c.tunnel_number.has_value() != (c.link_size > 0))
    throw std::invalid_argument(
        "tunnel number must be present exactly when the component carries "
        "link");
}

void validate(const Level& l) {
  if (l.one_handles < 0 || l.three_handles < 0)
    throw std::invalid_argument("negative handle count");
  if (l.components.empty())
    throw std::invalid_argument("level must have at least one component");
  for (const auto& c : l.components) validate(c);
}

void validate(const DecompositionProfile& p) {
  for (const auto& l : p.levels) validate(l);
}

long long component_complexity(const LevelComponent& c) {
  validate(c);
  if (c.tunnel_number.has_value()) return 2 * *c.tunnel_number + 1;
  return std::max(2 * c.heegaard_genus - 1, 0LL);
}

long long level_complexity(const Level& l) {
  validate(l);
  long long sum = 0;
  for (const auto& c : l.components) sum += component_complexity(c);
  return sum;
}

WidthMultiset width_of(const DecompositionProfile& p) {
  std::vector<long long> cs;
  cs.reserve(p.levels.size());
  for (const auto& l : p.levels) cs.push_back(level_complexity(l));
  return WidthMultiset(std::move(cs));
}

DecompositionProfile reversed(const DecompositionProfile& p) {
  DecompositionProfile out;
  out.label = p.label;
  out.levels.reserve(p.levels.size());
  for (auto it = p.levels.rbegin(); it != p.levels.rend(); ++it) {
    Level l = *it;
    std::swap(l.one_handles, l.three_handles);
    out.levels.push_back(std::move(l));
  }
  return out;
}

long long tunnel_split_union(std::optional<long long> t1,
                             std::optional<long long> t2, long long hg1,
                             long long hg2) {
  if (hg1 < 0 || hg2 < 0) throw std::invalid_argument("negative Heegaard genus");
  if ((t1 && *t1 < 0) || (t2 && *t2 < 0))
    throw std::invalid_argument("negative tunnel number");
  if (t1 && t2) return *t1 + *t2 + 1;
  if (t1) return *t1 + hg2;
  if (t2) return *t2 + hg1;
  throw std::invalid_argument("no link on either side");
}

namespace {

// A level with the given complexity. Complexities of honest levels are sums
// of 2t+1 and max(2g-1,0) terms, so every nonnegative value is realizable.
std::vector<LevelComponent> realize_complexity(long long c) {
  if (c == 0) return {LevelComponent{0, std::nullopt, 0}};
  if (c % 2 == 1) return {LevelComponent{0, (c - 1) / 2, 1}};
  return {LevelComponent{0, (c - 2) / 2, 1}, LevelComponent{1, std::nullopt, 0}};
}

}  // namespace

SplitResult split_level(const DecompositionProfile& p, std::size_t index,
                        const SplitData& data) {
  validate(p);
  if (index >= p.levels.size())
    throw std::invalid_argument("level index out of range");
  if (data.hg_b < 0 || data.t_b < 0 || data.hg_a_surgered < 0 || data.t_a < 0)
    throw std::invalid_argument("negative split data");

  const Level& old = p.levels[index];
  const long long c_i = level_complexity(old);
  const long long c_a = c_i + 2 * (data.hg_b - data.t_b);
  const long long c_b = c_i + 2 * (data.hg_a_surgered - data.t_a);
  if (c_a < 0 || c_b < 0)
    throw std::invalid_argument("inconsistent split data");

  Level level_a{old.one_handles, realize_complexity(c_a), 0};
  Level level_b{0, realize_complexity(c_b), old.three_handles};

  SplitResult out;
  out.c_new_a = c_a;
  out.c_new_b = c_b;
  out.profile.label = p.label;
  out.profile.levels.reserve(p.levels.size() + 1);
  for (std::size_t i = 0; i < p.levels.size(); ++i) {
    if (i == index) {
      out.profile.levels.push_back(std::move(level_a));
      out.profile.levels.push_back(std::move(level_b));
    } else {
      out.profile.levels.push_back(p.levels[i]);
    }
  }
  return out;
}

DecompositionProfile merge_levels(const DecompositionProfile& p,
                                  std::size_t index) {
  validate(p);
  if (index >= p.levels.size())
    throw std::invalid_argument("level index out of range");
  const Level& l = p.levels[index];
  const bool last = index + 1 == p.levels.size();
  const bool no_two_handles =
      std::all_of(l.components.begin(), l.components.end(),
                  [](const LevelComponent& c) { return c.link_size == 0; });
  if (last || !no_two_handles || l.three_handles != 0)
    throw std::invalid_argument("level not mergeable");

  DecompositionProfile out;
  out.label = p.label;
  out.levels.reserve(p.levels.size() - 1);
  for (std::size_t i = 0; i < p.levels.size(); ++i) {
    if (i == index) continue;
    Level next = p.levels[i];
    if (i == index + 1) next.one_handles += l.one_handles;
    out.levels.push_back(std::move(next));
  }
  return out;
}

DecompositionProfile concat_with_reversed(const DecompositionProfile& left,
                                          const DecompositionProfile& right) {
  validate(left);
  validate(right);
  DecompositionProfile out;
  if (left.label.empty())
    out.label = right.label.empty() ? "" : "rev(" + right.label + ")";
  else if (right.label.empty())
    out.label = left.label;
  else
    out.label = left.label + "+rev(" + right.label + ")";
  DecompositionProfile rev = reversed(right);
  out.levels = left.levels;
  out.levels.insert(out.levels.end(), rev.levels.begin(), rev.levels.end());
  return out;
}

}  // namespace thin4
