#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "domaincheck/dcpo.hpp"
#include "domaincheck/parallel.hpp"
#include "domaincheck/topology.hpp"
#include "domaincheck/waybelow.hpp"

namespace domaincheck {

/// The index set J of a net: a finite poset with a greatest element, or the
/// naturals with their usual order.
class IndexDcpo {
 public:
  static IndexDcpo omega() { return IndexDcpo{}; }
  /// Throws Error{InvalidNet} unless `p` is nonempty with a greatest element.
  static IndexDcpo finite(FinitePoset p);

  bool is_omega() const { return poset_ == nullptr; }
  const FinitePoset& poset() const;
  std::size_t size() const;
  std::size_t top() const;
  std::string name() const;

  friend bool operator==(const IndexDcpo& a, const IndexDcpo& b);

 private:
  std::shared_ptr<const FinitePoset> poset_;
};

/// A subset of ℕ that is eventually periodic in the weak sense: a union of
/// residue classes mod `period`, with finitely many points added or removed.
/// Always stored with the least period and minimal exception lists.
class OmegaSet {
 public:
  OmegaSet() = default;
  /// Throws Error{TooLarge} for a period above 64 and Error{Parse} for 0.
  OmegaSet(std::uint32_t period, Mask classes, std::vector<std::uint64_t> additions = {},
           std::vector<std::uint64_t> removals = {});

  static OmegaSet empty() { return {}; }
  static OmegaSet all() { return {1, 1}; }
  static OmegaSet finite(std::vector<std::uint64_t> points) { return {1, 0, std::move(points)}; }
  static OmegaSet residue(std::uint64_t r, std::uint32_t period);

  bool contains(std::uint64_t j) const;
  bool is_finite() const { return classes_ == 0; }
  bool is_empty() const { return classes_ == 0 && additions_.empty(); }
  std::uint32_t period() const { return period_; }
  Mask classes() const { return classes_; }
  const std::vector<std::uint64_t>& additions() const { return additions_; }
  const std::vector<std::uint64_t>& removals() const { return removals_; }

  OmegaSet unite(const OmegaSet& o) const;
  OmegaSet intersect(const OmegaSet& o) const;
  OmegaSet complement() const;

  std::string to_string() const;

  friend bool operator==(const OmegaSet&, const OmegaSet&) = default;

 private:
  template <typename Op>
  OmegaSet combine(const OmegaSet& o, Op op) const;

  std::uint32_t period_ = 1;
  Mask classes_ = 0;
  std::vector<std::uint64_t> additions_;
  std::vector<std::uint64_t> removals_;
};

/// A subset of a net's index: a mask over a finite J, or an OmegaSet.
using IndexSet = std::variant<Mask, OmegaSet>;

enum class IdealKind { Eventual, FiniteSets, DensityZero, TrivialAll };

std::string to_string(IdealKind k);
/// Accepts "eventual", "finite", "density0", "trivial".
IdealKind parse_ideal_kind(std::string_view text);

class Ideal {
 public:
  /// FiniteSets and DensityZero need the Omega index: Error{IndexMismatch}.
  static Ideal make(IdealKind kind, IndexDcpo index);

  IdealKind kind() const { return kind_; }
  const IndexDcpo& index() const { return index_; }
  bool is_trivial() const { return kind_ == IdealKind::TrivialAll; }

 private:
  Ideal(IdealKind kind, IndexDcpo index) : kind_(kind), index_(std::move(index)) {}

  IdealKind kind_;
  IndexDcpo index_;
};

/// Throws Error{IndexMismatch} when A and I live on different index shapes.
bool ideal_member(const Ideal& ideal, const IndexSet& a);

/// One residue class of an Omega net: a constant, or x_{pk+r} = k (ExampleOne
/// only).
struct Track {
  enum class Kind { Const, Ascend };
  Kind kind = Kind::Const;
  Elem value{};

  static Track constant(Elem e) { return {Kind::Const, e}; }
  static Track ascend() { return {Kind::Ascend, Elem{}}; }

  friend bool operator==(const Track&, const Track&) = default;
};

class Net {
 public:
  /// values[j] is x_j for the index element with id j. Throws
  /// Error{InvalidNet} when the map is not total.
  static Net finite(IndexDcpo index, std::vector<Elem> values);
  /// Throws Error{InvalidNet} for an empty track list or a period above 64.
  static Net omega(std::vector<Track> tracks);
  static Net constant(Elem c) { return omega({Track::constant(c)}); }

  const IndexDcpo& index() const { return index_; }
  bool is_omega() const { return index_.is_omega(); }
  const std::vector<Elem>& values() const { return values_; }
  const std::vector<Track>& tracks() const { return tracks_; }
  std::size_t period() const { return tracks_.size(); }

  /// Throws Error{InvalidNet} if a value lies outside d or an ascending
  /// track is used off ExampleOne.
  void validate(const Dcpo& d) const;

  /// Largest natural named by a constant value, plus one. Every level set of
  /// ↑n, ↑{a, n} and {n, n+1, ...} ∪ {top} is decided for all n ≥ this bound
  /// by its value at the bound, up to finitely many indices.
  std::uint64_t stable_bound() const;

  std::string to_string(const Dcpo& d) const;

 private:
  IndexDcpo index_;
  std::vector<Elem> values_;
  std::vector<Track> tracks_;
};

/// {j : x_j ∉ S}. Throws Error{NonRepresentableSet} if S would need an
/// infinite set of exceptions.
IndexSet level_set(const Dcpo& d, const Net& net, const SetRep& s);

struct ConvergenceVerdict {
  bool holds = false;
  /// IS witness: a directed set whose supremum dominates x.
  std::optional<SetRep> directed;
  /// GIS witness: a Smyth-directed family.
  std::optional<FinFamily> family;
  /// Topological failure: an open neighbourhood whose level set escapes I.
  std::optional<SetRep> open_set;
  /// GI failure: a member of the GI family whose up-set misses x.
  std::optional<FinSet> failing_member;
  std::string note;
};

ConvergenceVerdict converges_IS(const Dcpo& d, const Net& net, Elem x, const Ideal& ideal);
ConvergenceVerdict converges_GIS(const Dcpo& d, const Net& net, Elem x, const Ideal& ideal);
/// On ExampleOne only Scott, lower and Lawson topologies are accepted.
ConvergenceVerdict converges_topological(const Dcpo& d, const Net& net, Elem x, const Ideal& ideal,
                                         const Topology& t);
FinFamily gi_family(const Dcpo& d, const Net& net, const Ideal& ideal);
ConvergenceVerdict is_gi_liminf(const Dcpo& d, const Net& net, Elem x, const Ideal& ideal);

/// Definitional rechecks of positive witnesses.
bool check_is_witness(const Dcpo& d, const Net& net, Elem x, const Ideal& ideal, const SetRep& dir);
bool check_gis_witness(const Dcpo& d, const Net& net, Elem x, const Ideal& ideal,
                       const FinFamily& family);

enum class ConvergenceMode { IS, GIS, GI };
std::string to_string(ConvergenceMode m);

struct NetClassConfig {
  std::size_t max_index_points = 4;
  std::size_t max_omega_period = 3;
  bool include_constant_nets = true;
  IdealKind finite_ideal = IdealKind::Eventual;
  IdealKind omega_ideal = IdealKind::Eventual;
};

struct NetWithIdeal {
  Net net;
  Ideal ideal;
};

/// Throws Error{NetClassTooSmall} when constant nets are excluded.
std::vector<NetWithIdeal> enumerate_net_class(const FinitePoset& p, const NetClassConfig& config);

/// Opens U such that every (net, x) in the class converging in `mode` with
/// x ∈ U has its level set of U in the ideal.
Topology derive_convergence_topology(const FinitePoset& p, ConvergenceMode mode,
                                     std::span<const NetWithIdeal> nets, Exec exec = Exec::Parallel);
Topology derive_convergence_topology(const FinitePoset& p, ConvergenceMode mode,
                                     const NetClassConfig& config = {},
                                     Exec exec = Exec::Parallel);

}  // namespace domaincheck
