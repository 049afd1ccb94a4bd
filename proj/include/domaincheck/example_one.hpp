#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "domaincheck/elem.hpp"

namespace domaincheck {

/// The infinite dcpo L = N ∪ {a, top}: naturals ordered as usual, a
/// incomparable with every natural, and everything below top.
namespace example_one {

bool leq(Elem x, Elem y);
std::string format(Elem x);
/// Accepts decimal naturals, "a", and "top" (or "inf", "∞"). Throws
/// Error{UnknownElement}.
Elem parse(std::string_view text);

}  // namespace example_one

/// A subset of the ExampleOne carrier whose natural part is finite or
/// cofinite. Always held in canonical form: the finite naturals are sorted,
/// lie strictly below the cofinite threshold, and the threshold is minimal.
class E1Set {
 public:
  E1Set() = default;
  E1Set(std::vector<std::uint64_t> finite_nats, std::optional<std::uint64_t> cofinite_from,
        bool has_a, bool has_top);

  static E1Set empty() { return {}; }
  static E1Set all() { return E1Set({}, 0, true, true); }
  static E1Set of(std::span<const Elem> elems);
  static E1Set singleton(Elem e);
  /// All naturals k ≥ from.
  static E1Set nats_from(std::uint64_t from) { return E1Set({}, from, false, false); }

  const std::vector<std::uint64_t>& finite_nats() const { return finite_nats_; }
  const std::optional<std::uint64_t>& cofinite_from() const { return cofinite_from_; }
  bool has_a() const { return has_a_; }
  bool has_top() const { return has_top_; }

  bool contains(Elem e) const;
  bool contains_nat(std::uint64_t k) const;
  bool is_empty() const { return finite_nats_.empty() && !cofinite_from_ && !has_a_ && !has_top_; }
  bool nat_part_empty() const { return finite_nats_.empty() && !cofinite_from_; }
  bool nat_part_finite() const { return !cofinite_from_.has_value(); }
  std::optional<std::uint64_t> min_nat() const;
  /// Largest natural, only for a finite natural part.
  std::optional<std::uint64_t> max_nat() const;
  /// Smallest t with every k ≥ t a member, if the natural part is cofinite.
  std::optional<std::uint64_t> tail_start() const { return cofinite_from_; }

  E1Set unite(const E1Set& other) const;
  E1Set intersect(const E1Set& other) const;
  E1Set complement() const;
  E1Set minus(const E1Set& other) const { return intersect(other.complement()); }
  bool subset_of(const E1Set& other) const { return minus(other).is_empty(); }

  /// The natural part without a/top.
  E1Set nat_part() const { return E1Set(finite_nats_, cofinite_from_, false, false); }

  std::string to_string() const;

  friend bool operator==(const E1Set&, const E1Set&) = default;

 private:
  void canonicalize();

  std::vector<std::uint64_t> finite_nats_;
  std::optional<std::uint64_t> cofinite_from_;
  bool has_a_ = false;
  bool has_top_ = false;
};

}  // namespace domaincheck
