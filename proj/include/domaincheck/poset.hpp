#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "domaincheck/elem.hpp"

namespace domaincheck {

using LePair = std::pair<std::string, std::string>;

/// A finite poset over at most 64 named elements. The order is stored as one
/// up-set bitmask and one down-set bitmask per element.
class FinitePoset {
 public:
  /// Builds the reflexive-transitive closure of `pairs` over `elements`.
  /// Throws Error{DuplicateElement}, Error{UnknownElement}, Error{Cycle},
  /// Error{TooLarge}.
  static FinitePoset build(std::string name, std::vector<std::string> elements,
                           std::span<const LePair> pairs);

  /// Same as build, with pairs given as element indices.
  static FinitePoset from_index_pairs(std::string name, std::vector<std::string> elements,
                                      std::span<const std::pair<std::size_t, std::size_t>> pairs);

  std::size_t size() const { return names_.size(); }
  const std::string& name() const { return name_; }
  const std::vector<std::string>& element_names() const { return names_; }
  const std::string& element_name(std::size_t i) const { return names_.at(i); }

  std::optional<std::size_t> find(std::string_view element) const;
  /// Throws Error{UnknownElement}.
  std::size_t index_of(std::string_view element) const;

  bool leq(std::size_t x, std::size_t y) const { return has(up_[x], y); }
  Mask up(std::size_t x) const { return up_[x]; }
  Mask down(std::size_t x) const { return down_[x]; }
  Mask all() const { return full_mask(size()); }

  Mask up_closure(Mask s) const;
  Mask down_closure(Mask s) const;
  bool is_upper(Mask s) const { return up_closure(s) == s; }
  bool is_lower(Mask s) const { return down_closure(s) == s; }

  /// Minimal elements of `s` (antichain normalization).
  Mask minimal(Mask s) const;
  Mask maximal(Mask s) const;
  bool is_antichain(Mask s) const { return minimal(s) == s; }

  /// Greatest element of `s`, if any.
  std::optional<std::size_t> greatest(Mask s) const;
  /// Least upper bound of `s` in the whole poset, if any.
  std::optional<std::size_t> least_upper_bound(Mask s) const;

  /// Number of pairs (x, y) with x ≤ y.
  std::size_t relation_size() const;

  /// All (x, y) with x ≤ y, as indices.
  std::vector<std::pair<std::size_t, std::size_t>> relation() const;

  FinitePoset renamed(std::string name) const;

  friend bool operator==(const FinitePoset& a, const FinitePoset& b) {
    return a.names_ == b.names_ && a.up_ == b.up_;
  }

 private:
  FinitePoset() = default;

  std::string name_;
  std::vector<std::string> names_;
  std::vector<Mask> up_;
  std::vector<Mask> down_;
};

/// The finite shadow {0..n, a, top} of the ExampleOne order.
FinitePoset truncate_example_one(std::size_t n);

}  // namespace domaincheck
