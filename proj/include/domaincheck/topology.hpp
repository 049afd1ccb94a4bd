#pragma once

#include <string_view>
#include <vector>

#include "domaincheck/dcpo.hpp"
#include "domaincheck/parallel.hpp"

namespace domaincheck {

enum class TopologyKind { Scott, Lower, Lawson, Glim, Discrete, Indiscrete, Derived };

std::string_view to_string(TopologyKind kind);

/// Finite topologies are explicit open-set families (sorted ascending by
/// mask); ExampleOne topologies are openness predicates.
class Topology {
 public:
  /// Validates that the family contains ∅ and the carrier and is closed under
  /// union and intersection. Throws Error{PreconditionFailed} otherwise.
  static Topology finite(TopologyKind kind, std::size_t carrier_size, std::vector<Mask> opens);
  /// Scott, Lower or Lawson on ExampleOne.
  static Topology example_one(TopologyKind kind);

  TopologyKind kind() const { return kind_; }
  bool is_finite() const { return !symbolic_; }
  std::size_t carrier_size() const { return n_; }
  /// Throws Error{BackendUnsupported} for a symbolic topology.
  const std::vector<Mask>& opens() const;

  bool is_open(const SetRep& s) const;

  /// Same open sets (kind is ignored).
  bool same_opens(const Topology& other) const;
  /// Every open of this topology is open in `other`.
  bool coarser_than(const Topology& other) const;

 private:
  Topology() = default;

  TopologyKind kind_ = TopologyKind::Scott;
  bool symbolic_ = false;
  std::size_t n_ = 0;
  std::vector<Mask> opens_;
};

/// Checks the topology axioms on a family of subsets of an n-element carrier.
bool is_topology_family(std::size_t carrier_size, const std::vector<Mask>& opens);

/// Smallest topology containing `subbasis`: finite intersections form a
/// basis, and a set is open iff it is the union of the basis sets inside it.
std::vector<Mask> generate_topology(std::size_t carrier_size, const std::vector<Mask>& subbasis);

std::vector<Mask> upper_sets(const FinitePoset& p);

/// σ(L) computed from the definition (every directed D with sup D ∈ U meets
/// U); asserted equal to the upper-set family. Throws Error{Internal} if the
/// two disagree and Error{TooLarge} beyond 20 elements.
Topology scott_topology(const FinitePoset& p, Exec exec = Exec::Parallel);
Topology lower_topology(const FinitePoset& p);
Topology lawson_topology(const FinitePoset& p);
Topology discrete_topology(std::size_t carrier_size);
Topology indiscrete_topology(std::size_t carrier_size);

/// Scott-openness from the definition on finite posets; on ExampleOne the
/// closed form "upper, and top ∈ S forces a natural into S".
bool is_scott_open(const Dcpo& d, const SetRep& s);

/// Largest open inside S, and smallest closed set containing S.
SetRep interior(const Topology& t, const SetRep& s);
SetRep closure(const Topology& t, const SetRep& s);

/// The g-lim-inf topology {U : for every Smyth-directed family 𝓕 and x ∈ U
/// with ∩↑F ⊆ ↑x some F ∈ 𝓕 has ↑F ⊆ U}, computed by enumerating families
/// of at most `family_bound` antichains (naive) and by the reduction to
/// upper sets.
struct GlimDerivation {
  Topology naive;
  Topology reduced;
  bool agree = false;
};

GlimDerivation derive_glim_topology_both(const FinitePoset& p, std::size_t family_bound = 4,
                                         Exec exec = Exec::Parallel);
/// Throws Error{Internal} if the two computations disagree.
Topology derive_glim_topology(const FinitePoset& p, std::size_t family_bound = 4,
                              Exec exec = Exec::Parallel);

}  // namespace domaincheck
