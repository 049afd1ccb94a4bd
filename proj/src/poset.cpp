#include "domaincheck/poset.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "domaincheck/error.hpp"

namespace domaincheck {

FinitePoset FinitePoset::from_index_pairs(
    std::string name, std::vector<std::string> elements,
    std::span<const std::pair<std::size_t, std::size_t>> pairs) {
  const std::size_t n = elements.size();
  if (n > kMaxElements) {
    throw Error(ErrorKind::TooLarge, "poset '" + name + "' has more than 64 elements");
  }
  {
    auto sorted = elements;
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) {
      throw Error(ErrorKind::DuplicateElement, "element '" + *dup + "' listed twice");
    }
  }

  FinitePoset p;
  p.name_ = std::move(name);
  p.names_ = std::move(elements);
  p.up_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) p.up_[i] = bit(i);
  for (auto [x, y] : pairs) {
    if (x >= n || y >= n) throw Error(ErrorKind::UnknownElement, "pair index out of range");
    p.up_[x] |= bit(y);
  }
  // Warshall on bit rows.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (has(p.up_[i], k)) p.up_[i] |= p.up_[k];
    }
  }
  p.down_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (has(p.up_[i], j)) p.down_[j] |= bit(i);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    Mask both = p.up_[i] & p.down_[i] & ~bit(i);
    if (both != 0) {
      auto j = static_cast<std::size_t>(std::countr_zero(both));
      throw Error(ErrorKind::Cycle, "'" + p.names_[i] + "' and '" + p.names_[j] +
                                        "' are below each other in '" + p.name_ + "'");
    }
  }
  return p;
}

FinitePoset FinitePoset::build(std::string name, std::vector<std::string> elements,
                               std::span<const LePair> pairs) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < elements.size(); ++i) index.emplace(elements[i], i);
  std::vector<std::pair<std::size_t, std::size_t>> ids;
  ids.reserve(pairs.size());
  auto lookup = [&](const std::string& e) {
    auto it = index.find(e);
    if (it == index.end()) throw Error(ErrorKind::UnknownElement, "'" + e + "' in le pair");
    return it->second;
  };
  for (const auto& [x, y] : pairs) ids.emplace_back(lookup(x), lookup(y));
  return from_index_pairs(std::move(name), std::move(elements), ids);
}

std::optional<std::size_t> FinitePoset::find(std::string_view element) const {
  auto it = std::find(names_.begin(), names_.end(), element);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

std::size_t FinitePoset::index_of(std::string_view element) const {
  auto i = find(element);
  if (!i) {
    throw Error(ErrorKind::UnknownElement,
                "'" + std::string(element) + "' is not an element of '" + name_ + "'");
  }
  return *i;
}

Mask FinitePoset::up_closure(Mask s) const {
  Mask out = 0;
  for (Mask rest = s; rest != 0; rest &= rest - 1) out |= up_[std::countr_zero(rest)];
  return out;
}

Mask FinitePoset::down_closure(Mask s) const {
  Mask out = 0;
  for (Mask rest = s; rest != 0; rest &= rest - 1) out |= down_[std::countr_zero(rest)];
  return out;
}

Mask FinitePoset::minimal(Mask s) const {
  Mask out = 0;
  for (Mask rest = s; rest != 0; rest &= rest - 1) {
    auto i = static_cast<std::size_t>(std::countr_zero(rest));
    if ((down_[i] & s) == bit(i)) out |= bit(i);
  }
  return out;
}

Mask FinitePoset::maximal(Mask s) const {
  Mask out = 0;
  for (Mask rest = s; rest != 0; rest &= rest - 1) {
    auto i = static_cast<std::size_t>(std::countr_zero(rest));
    if ((up_[i] & s) == bit(i)) out |= bit(i);
  }
  return out;
}

std::optional<std::size_t> FinitePoset::greatest(Mask s) const {
  for (Mask rest = s; rest != 0; rest &= rest - 1) {
    auto i = static_cast<std::size_t>(std::countr_zero(rest));
    if (subset(s, down_[i])) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> FinitePoset::least_upper_bound(Mask s) const {
  Mask bounds = all();
  for (Mask rest = s; rest != 0; rest &= rest - 1) bounds &= up_[std::countr_zero(rest)];
  for (Mask rest = bounds; rest != 0; rest &= rest - 1) {
    auto i = static_cast<std::size_t>(std::countr_zero(rest));
    if (subset(bounds, up_[i])) return i;
  }
  return std::nullopt;
}

std::size_t FinitePoset::relation_size() const {
  std::size_t total = 0;
  for (Mask m : up_) total += static_cast<std::size_t>(std::popcount(m));
  return total;
}

std::vector<std::pair<std::size_t, std::size_t>> FinitePoset::relation() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = 0; j < size(); ++j) {
      if (leq(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

FinitePoset FinitePoset::renamed(std::string name) const {
  FinitePoset copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

FinitePoset truncate_example_one(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t k = 0; k <= n; ++k) names.push_back(std::to_string(k));
  names.emplace_back("a");
  names.emplace_back("top");
  const std::size_t a = n + 1;
  const std::size_t top = n + 2;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t k = 0; k < n; ++k) pairs.emplace_back(k, k + 1);
  pairs.emplace_back(n, top);
  pairs.emplace_back(a, top);
  return FinitePoset::from_index_pairs("e1trunc_" + std::to_string(n), std::move(names), pairs);
}

}  // namespace domaincheck
