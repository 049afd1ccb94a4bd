#include "domaincheck/rudin.hpp"

#include <algorithm>

#include "domaincheck/error.hpp"
#include "domaincheck/topology.hpp"

namespace domaincheck {

bool is_directed_family(const Dcpo& d, const FinFamily& family) {
  return is_smyth_directed(d, family);
}

RudinWitness extract_directed(const Dcpo& d, const FinFamily& family) {
  if (!d.is_finite()) {
    throw Error(ErrorKind::BackendUnsupported, "Rudin extraction needs an explicit family");
  }
  if (!family.is_explicit() || !is_directed_family(d, family)) {
    throw Error(ErrorKind::NotDirectedFamily, "family is not directed");
  }
  const auto& sets = family.sets();
  const FinitePoset& p = d.poset();
  // A finite directed family has a member whose up-set sits inside all others.
  const FinSet* least = nullptr;
  for (const auto& f : sets) {
    const Mask up = p.up_closure(f.mask());
    if (std::all_of(sets.begin(), sets.end(),
                    [&](const FinSet& g) { return subset(up, p.up_closure(g.mask())); })) {
      least = &f;
      break;
    }
  }
  if (least == nullptr) throw Error(ErrorKind::Internal, "directed family without a least member");

  const Elem top = least->members().front();
  RudinWitness w{d.singleton(top), {}};
  Mask dir = bit(top.index());
  for (const auto& f : sets) {
    const auto it = std::find_if(f.members().begin(), f.members().end(),
                                 [&](Elem e) { return d.leq(e, top); });
    if (it == f.members().end()) throw Error(ErrorKind::Internal, "member not below the least one");
    dir |= bit(it->index());
    w.meets.emplace_back(f, *it);
  }
  w.directed = dir;
  if (!check_rudin_witness(d, family, w)) {
    throw Error(ErrorKind::Internal, "extracted Rudin witness fails its recheck");
  }
  return w;
}

bool check_rudin_witness(const Dcpo& d, const FinFamily& family, const RudinWitness& w) {
  if (!d.is_finite() || !family.is_explicit() || !d.is_directed(w.directed)) return false;
  Mask cover = 0;
  for (const auto& f : family.sets()) cover |= f.mask();
  if (!subset(w.directed.bits(), cover)) return false;
  for (const auto& f : family.sets()) {
    const auto it = std::find_if(w.meets.begin(), w.meets.end(),
                                 [&](const auto& m) { return m.first == f; });
    if (it == w.meets.end() || !f.contains(it->second) || !d.contains(w.directed, it->second)) {
      return false;
    }
  }
  return true;
}

FinSet rudin_corollary_check(const Dcpo& d, const FinFamily& family, const SetRep& u) {
  if (!is_scott_open(d, u)) throw Error(ErrorKind::PreconditionFailed, "U is not Scott-open");
  if (!is_directed_family(d, family)) {
    throw Error(ErrorKind::PreconditionFailed, "family is not directed");
  }
  auto fits = [&](const FinSet& f) { return d.subset_of(up_of(d, f), u); };
  if (family.is_explicit()) {
    SetRep meet = d.whole();
    for (const auto& f : family.sets()) meet = d.intersect(meet, up_of(d, f));
    if (!d.subset_of(meet, u)) {
      throw Error(ErrorKind::PreconditionFailed, "intersection of up-sets is not inside U");
    }
    for (const auto& f : family.sets()) {
      if (fits(f)) return f;
    }
    throw Error(ErrorKind::NoWitness, "no member has its up-set inside U");
  }
  const E1Family& schema = family.schema();
  if (!d.subset_of(SetRep(schema.intersection_of_upsets()), u)) {
    throw Error(ErrorKind::PreconditionFailed, "intersection of up-sets is not inside U");
  }
  // A Scott-open U holding ∩↑F is entered by some ↑{n} or ↑{a, n} once n
  // reaches the tail of U, so sampling past it is exhaustive.
  const E1Set& us = u.symbolic();
  std::uint64_t bound = schema.max_mentioned();
  if (auto t = us.tail_start()) bound = std::max(bound, *t);
  if (auto m = us.max_nat()) bound = std::max(bound, *m);
  for (const auto& f : schema.sample(bound + 1)) {
    if (fits(f)) return f;
  }
  throw Error(ErrorKind::NoWitness, "no sampled member has its up-set inside U");
}

}  // namespace domaincheck
