#pragma once

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "domaincheck/elem.hpp"
#include "domaincheck/example_one.hpp"
#include "domaincheck/poset.hpp"

namespace domaincheck {

/// A subset of a dcpo carrier: a membership mask on a finite poset, or an
/// E1Set on ExampleOne.
class SetRep {
 public:
  SetRep(Mask bits) : rep_(bits) {}  // NOLINT(google-explicit-constructor)
  SetRep(E1Set set) : rep_(std::move(set)) {}  // NOLINT(google-explicit-constructor)

  bool is_finite() const { return std::holds_alternative<Mask>(rep_); }
  /// Throws Error{BackendUnsupported} on the wrong backend.
  Mask bits() const;
  const E1Set& symbolic() const;

  friend bool operator==(const SetRep&, const SetRep&) = default;

 private:
  std::variant<Mask, E1Set> rep_;
};

/// A dcpo behind one query interface. Finite posets are dcpos automatically:
/// a finite directed set has a greatest element, which is its supremum.
class Dcpo {
 public:
  static Dcpo finite(FinitePoset p);
  static Dcpo finite(std::shared_ptr<const FinitePoset> p);
  static Dcpo example_one();

  bool is_finite() const { return poset_ != nullptr; }
  bool is_example_one() const { return poset_ == nullptr; }
  /// Throws Error{BackendUnsupported} on ExampleOne.
  const FinitePoset& poset() const;
  const std::shared_ptr<const FinitePoset>& poset_ptr() const { return poset_; }
  std::string name() const;

  /// Throws Error{UnknownElement}.
  void validate(Elem x) const;
  void validate(const SetRep& s) const;
  std::string format(Elem x) const;
  Elem parse(std::string_view text) const;

  bool leq(Elem x, Elem y) const;
  bool contains(const SetRep& s, Elem x) const;

  SetRep empty() const;
  SetRep whole() const;
  SetRep singleton(Elem x) const;
  SetRep of(std::span<const Elem> elems) const;
  SetRep unite(const SetRep& a, const SetRep& b) const;
  SetRep intersect(const SetRep& a, const SetRep& b) const;
  SetRep complement(const SetRep& a) const;
  bool subset_of(const SetRep& a, const SetRep& b) const;
  bool is_empty(const SetRep& a) const;

  /// ↑S and ↓S.
  SetRep up_closure(const SetRep& s) const;
  SetRep down_closure(const SetRep& s) const;
  SetRep up(Elem x) const { return up_closure(singleton(x)); }
  SetRep down(Elem x) const { return down_closure(singleton(x)); }
  bool is_upper(const SetRep& s) const { return up_closure(s) == s; }

  /// Nonempty and every pair has an upper bound inside S. The empty set is
  /// not directed.
  bool is_directed(const SetRep& s) const;
  /// Throws Error{NotDirected}.
  Elem directed_sup(const SetRep& s) const;

  std::string format(const SetRep& s) const;
  /// Element list of a finite-backend set, in id order.
  std::vector<Elem> elements(const SetRep& s) const;

 private:
  std::shared_ptr<const FinitePoset> poset_;
};

/// Calls `fn` with every directed subset of `p`: exactly the nonempty subsets
/// with a greatest element m, generated as {m} ∪ T for T ⊆ ↓m ∖ {m}.
void for_each_directed_subset(const FinitePoset& p, const std::function<void(Mask)>& fn);
std::vector<Mask> enumerate_directed_subsets(const FinitePoset& p);
/// Throws Error{BackendUnsupported} on ExampleOne.
std::vector<Mask> enumerate_directed_subsets(const Dcpo& d);

/// Pairwise definition: every two members have an upper bound inside S.
bool is_directed_pairwise(const FinitePoset& p, Mask s);

}  // namespace domaincheck
