#pragma once

#include <compare>
#include <cstdint>
#include <limits>

namespace domaincheck {

using Mask = std::uint64_t;

inline constexpr std::size_t kMaxElements = 64;

constexpr Mask bit(std::size_t i) { return Mask{1} << i; }
constexpr bool has(Mask m, std::size_t i) { return (m >> i) & 1U; }
constexpr Mask full_mask(std::size_t n) { return n >= 64 ? ~Mask{0} : bit(n) - 1; }
constexpr bool subset(Mask a, Mask b) { return (a & ~b) == 0; }

/// A carrier element. On a finite poset the code is the element index; on the
/// ExampleOne carrier N ∪ {a, top} naturals map to themselves and a, top take
/// the two largest codes, so ordering by code puts every natural first.
struct Elem {
  std::uint64_t code = 0;

  static constexpr std::uint64_t kA = std::numeric_limits<std::uint64_t>::max() - 1;
  static constexpr std::uint64_t kTop = std::numeric_limits<std::uint64_t>::max();

  static constexpr Elem id(std::size_t i) { return Elem{i}; }
  static constexpr Elem nat(std::uint64_t k) { return Elem{k}; }
  static constexpr Elem a() { return Elem{kA}; }
  static constexpr Elem top() { return Elem{kTop}; }

  constexpr bool is_nat() const { return code < kA; }
  constexpr bool is_a() const { return code == kA; }
  constexpr bool is_top() const { return code == kTop; }
  constexpr std::size_t index() const { return static_cast<std::size_t>(code); }

  friend constexpr auto operator<=>(Elem, Elem) = default;
};

}  // namespace domaincheck
