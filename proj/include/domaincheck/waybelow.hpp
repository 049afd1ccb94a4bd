#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "domaincheck/dcpo.hpp"

namespace domaincheck {

/// A nonempty finite subset, normalized to its minimal elements and sorted by
/// element code. ↑F depends only on this antichain.
class FinSet {
 public:
  /// Throws Error{PreconditionFailed} on an empty input.
  static FinSet make(const Dcpo& d, std::vector<Elem> members);
  static FinSet single(const Dcpo& d, Elem x) { return make(d, {x}); }
  /// Finite backend: the minimal elements of a nonempty mask.
  static FinSet from_mask(const Dcpo& d, Mask m);

  const std::vector<Elem>& members() const { return members_; }
  bool contains(Elem e) const;
  /// Finite backend only.
  Mask mask() const;
  std::size_t size() const { return members_.size(); }

  friend auto operator<=>(const FinSet&, const FinSet&) = default;

 private:
  std::vector<Elem> members_;
};

/// One generator of a symbolic ExampleOne family: {n} for n in [lo, hi],
/// {a, n} for n in [lo, hi] (hi empty means unbounded), or a literal set.
struct E1FamilyPart {
  enum class Kind { NatRange, APairRange, Literal };
  Kind kind = Kind::Literal;
  std::uint64_t lo = 0;
  std::optional<std::uint64_t> hi;
  std::optional<FinSet> literal;

  friend bool operator==(const E1FamilyPart&, const E1FamilyPart&) = default;
};

/// A possibly infinite family of ExampleOne antichains given by a schema.
struct E1Family {
  std::vector<E1FamilyPart> parts;

  bool empty() const;
  bool contains(const FinSet& f) const;
  /// ∩_{F ∈ family} ↑F in the E1Set algebra (closed form; infinite ranges
  /// take their limit).
  E1Set intersection_of_upsets() const;
  /// Every pair of members has a member whose up-set lies in both up-sets.
  bool is_smyth_directed() const;
  /// Members with every natural index capped at `bound`, in canonical order.
  std::vector<FinSet> sample(std::uint64_t bound) const;
  /// Largest natural index mentioned by a finite bound or literal.
  std::uint64_t max_mentioned() const;
  std::string to_string() const;

  friend bool operator==(const E1Family&, const E1Family&) = default;
};

/// A family of finite sets: an explicit deduplicated list (kept in canonical
/// order) or a symbolic ExampleOne schema.
class FinFamily {
 public:
  FinFamily() = default;
  explicit FinFamily(std::vector<FinSet> sets);
  explicit FinFamily(E1Family schema) : rep_(std::move(schema)) {}

  bool is_explicit() const { return std::holds_alternative<std::vector<FinSet>>(rep_); }
  /// Throws Error{BackendUnsupported} for a schema.
  const std::vector<FinSet>& sets() const;
  const E1Family& schema() const;
  bool contains(const FinSet& f) const;

  friend bool operator==(const FinFamily&, const FinFamily&) = default;

 private:
  std::variant<std::vector<FinSet>, E1Family> rep_;
};

SetRep up_of(const Dcpo& d, const FinSet& f);

/// Every two members E, F have a member H with ↑H ⊆ ↑E ∩ ↑F. Empty families
/// are not directed.
bool is_smyth_directed(const Dcpo& d, const FinFamily& family);

/// G ≤ H in the Smyth preorder: ↑H ⊆ ↑G.
bool smyth_leq(const Dcpo& d, const FinSet& g, const FinSet& h);

/// G ≪ H: every directed D with sup D ∈ ↑H meets ↑G. Brute force over
/// directed subsets on finite posets, closed-form rule on ExampleOne.
bool set_way_below(const Dcpo& d, const FinSet& g, const FinSet& h);
bool point_way_below(const Dcpo& d, Elem x, Elem y);

/// {y : y ≪ x}. Finite backend gives a mask; ExampleOne a symbolic set.
SetRep waydown(const Dcpo& d, Elem x);

/// fin(x) = {F : F ≪ x}: every such antichain on a finite poset; a
/// generating schema on ExampleOne.
FinFamily fin_of(const Dcpo& d, Elem x);

/// ⇑F = {x : F ≪ x}.
SetRep way_up(const Dcpo& d, const FinSet& f);

/// Throws Error{NotQuasiContinuous}, Error{PreconditionFailed} when H is not
/// way below x, and Error{NoWitness} if the search comes up empty.
FinSet interpolate(const Dcpo& d, const FinSet& h, Elem x);

struct ClassifyWitness {
  std::optional<Elem> element;
  std::optional<SetRep> open_set;
  std::string note;
};

struct ClassifyReport {
  bool is_dcpo = false;
  bool is_continuous = false;
  bool is_quasi_continuous = false;
  bool is_meet_continuous = false;
  std::optional<ClassifyWitness> dcpo_witness;
  std::optional<ClassifyWitness> continuous_witness;
  std::optional<ClassifyWitness> quasi_continuous_witness;
  std::optional<ClassifyWitness> meet_continuous_witness;
};

/// Decides the four flags from their definitions (brute force on finite
/// posets). Throws Error{Internal} if continuity disagrees with
/// quasi-continuity ∧ meet-continuity.
ClassifyReport classify(const Dcpo& d);

/// All nonempty antichains of a finite poset as masks, ascending.
std::vector<Mask> antichains(const FinitePoset& p);

}  // namespace domaincheck
