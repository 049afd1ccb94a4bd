#pragma once

#include <utility>
#include <vector>

#include "domaincheck/dcpo.hpp"
#include "domaincheck/waybelow.hpp"

namespace domaincheck {

/// A directed set drawn from ∪𝓕 that meets every member of 𝓕.
struct RudinWitness {
  SetRep directed;
  /// Each family member with the element of D chosen inside it.
  std::vector<std::pair<FinSet, Elem>> meets;
};

/// Every pair E, F of members has a member H with ↑H ⊆ ↑E ∩ ↑F.
bool is_directed_family(const Dcpo& d, const FinFamily& family);

/// Takes the Smyth-least member F₀ and its first element d*, then from each
/// member the first element below d*. Finite backend only: throws
/// Error{BackendUnsupported} or Error{NotDirectedFamily}.
RudinWitness extract_directed(const Dcpo& d, const FinFamily& family);

/// D is directed, lies inside ∪𝓕, and each recorded meet is in both D and
/// its member; every member has a recorded meet.
bool check_rudin_witness(const Dcpo& d, const FinFamily& family, const RudinWitness& w);

/// Returns a member F with ↑F ⊆ U. Throws Error{PreconditionFailed} unless U
/// is Scott-open, the family is directed and ∩↑F ⊆ U; Error{NoWitness} if
/// no member fits.
FinSet rudin_corollary_check(const Dcpo& d, const FinFamily& family, const SetRep& u);

}  // namespace domaincheck
