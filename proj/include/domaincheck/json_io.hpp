#pragma once

#include <json.hpp>

#include "domaincheck/convergence.hpp"
#include "domaincheck/dcpo.hpp"
#include "domaincheck/rudin.hpp"
#include "domaincheck/topology.hpp"
#include "domaincheck/waybelow.hpp"

namespace domaincheck::io {

using nlohmann::json;

/// {"name", "elements", "le"}: elements sorted by name, le the full
/// reflexive-transitive relation sorted lexicographically.
json poset_to_json(const FinitePoset& p);
/// Reads generator pairs and closes them. Throws Error{Parse} on malformed
/// input, plus the FinitePoset::build errors.
FinitePoset poset_from_json(const json& j);

json elem_to_json(const Dcpo& d, Elem x);
/// Sorted element names on a finite poset; the canonical string otherwise.
json set_to_json(const Dcpo& d, const SetRep& s);
json finset_to_json(const Dcpo& d, const FinSet& f);
FinSet finset_from_json(const Dcpo& d, const json& j);

/// {"sets": [[...], ...]} or {"schema": "..."}.
json family_to_json(const Dcpo& d, const FinFamily& f);
FinFamily family_from_json(const Dcpo& d, const json& j);

json net_to_json(const Dcpo& d, const Net& net);
Net net_from_json(const Dcpo& d, const json& j);

json ideal_to_json(const Ideal& ideal);
Ideal ideal_from_json(const json& j, const IndexDcpo& index);

json index_set_to_json(const IndexSet& s);

/// {"kind", "opens"} with opens listed by size, then by their sorted names.
json topology_to_json(const Dcpo& d, const Topology& t);

json verdict_to_json(const Dcpo& d, const ConvergenceVerdict& v);
json classify_to_json(const Dcpo& d, const ClassifyReport& r);
json rudin_to_json(const Dcpo& d, const RudinWitness& w);

}  // namespace domaincheck::io
