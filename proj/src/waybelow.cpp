#include "domaincheck/waybelow.hpp"

#include <algorithm>
#include <bit>

#include "domaincheck/error.hpp"
#include "domaincheck/topology.hpp"

namespace domaincheck {

namespace {

std::size_t low(Mask m) { return static_cast<std::size_t>(std::countr_zero(m)); }

std::optional<std::uint64_t> nat_member(const FinSet& f) {
  for (Elem e : f.members()) {
    if (e.is_nat()) return e.code;
  }
  return std::nullopt;
}

// ↑F for a nonempty ExampleOne antichain.
E1Set e1_up(const FinSet& f) { return E1Set({}, nat_member(f), f.contains(Elem::a()), true); }

}  // namespace

// ---------------------------------------------------------------------------
// FinSet / families

FinSet FinSet::make(const Dcpo& d, std::vector<Elem> members) {
  if (members.empty()) throw Error(ErrorKind::PreconditionFailed, "finite sets must be nonempty");
  for (Elem e : members) d.validate(e);
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  FinSet f;
  for (Elem e : members) {
    bool dominated = std::any_of(members.begin(), members.end(),
                                 [&](Elem o) { return o != e && d.leq(o, e); });
    if (!dominated) f.members_.push_back(e);
  }
  return f;
}

FinSet FinSet::from_mask(const Dcpo& d, Mask m) {
  if (m == 0) throw Error(ErrorKind::PreconditionFailed, "finite sets must be nonempty");
  std::vector<Elem> members;
  for (Mask rest = d.poset().minimal(m); rest != 0; rest &= rest - 1) {
    members.push_back(Elem::id(low(rest)));
  }
  FinSet f;
  f.members_ = std::move(members);
  return f;
}

bool FinSet::contains(Elem e) const { return std::binary_search(members_.begin(), members_.end(), e); }

Mask FinSet::mask() const {
  Mask m = 0;
  for (Elem e : members_) {
    if (e.code >= kMaxElements) throw Error(ErrorKind::BackendUnsupported, "not a finite-backend set");
    m |= bit(e.index());
  }
  return m;
}

bool E1Family::empty() const {
  return std::all_of(parts.begin(), parts.end(), [](const E1FamilyPart& p) {
    return p.kind != E1FamilyPart::Kind::Literal && p.hi && *p.hi < p.lo;
  });
}

bool E1Family::contains(const FinSet& f) const {
  const auto& m = f.members();
  for (const auto& part : parts) {
    switch (part.kind) {
      case E1FamilyPart::Kind::Literal:
        if (part.literal && *part.literal == f) return true;
        break;
      case E1FamilyPart::Kind::NatRange:
        if (m.size() == 1 && m[0].is_nat() && m[0].code >= part.lo && (!part.hi || m[0].code <= *part.hi)) {
          return true;
        }
        break;
      case E1FamilyPart::Kind::APairRange:
        if (m.size() == 2 && m[0].is_nat() && m[1].is_a() && m[0].code >= part.lo &&
            (!part.hi || m[0].code <= *part.hi)) {
          return true;
        }
        break;
    }
  }
  return false;
}

E1Set E1Family::intersection_of_upsets() const {
  E1Set acc = E1Set::all();
  for (const auto& part : parts) {
    switch (part.kind) {
      case E1FamilyPart::Kind::Literal:
        acc = acc.intersect(e1_up(*part.literal));
        break;
      case E1FamilyPart::Kind::NatRange:
        if (part.hi && *part.hi < part.lo) break;
        acc = acc.intersect(E1Set({}, part.hi, false, true));
        break;
      case E1FamilyPart::Kind::APairRange:
        if (part.hi && *part.hi < part.lo) break;
        acc = acc.intersect(E1Set({}, part.hi, true, true));
        break;
    }
  }
  return acc;
}

namespace {

// Members whose up-set might be the smallest: the top end of each bounded
// range and every literal.
std::vector<FinSet> extreme_members(const E1Family& fam) {
  const Dcpo d = Dcpo::example_one();
  std::vector<FinSet> out;
  for (const auto& part : fam.parts) {
    if (part.kind == E1FamilyPart::Kind::Literal) {
      out.push_back(*part.literal);
    } else if (part.hi && *part.hi >= part.lo) {
      if (part.kind == E1FamilyPart::Kind::NatRange) {
        out.push_back(FinSet::single(d, Elem::nat(*part.hi)));
      } else {
        out.push_back(FinSet::make(d, {Elem::a(), Elem::nat(*part.hi)}));
      }
    }
  }
  return out;
}

bool unbounded(const E1Family& fam, E1FamilyPart::Kind kind) {
  return std::any_of(fam.parts.begin(), fam.parts.end(),
                     [&](const E1FamilyPart& p) { return p.kind == kind && !p.hi; });
}

}  // namespace

bool E1Family::is_smyth_directed() const {
  if (empty()) return false;
  const E1Set meet = intersection_of_upsets();
  for (const auto& f : extreme_members(*this)) {
    if (e1_up(f) == meet) return true;  // a Smyth-least member
  }
  const Dcpo d = Dcpo::example_one();
  const FinSet just_a = FinSet::single(d, Elem::a());
  if (unbounded(*this, E1FamilyPart::Kind::NatRange)) {
    // ↑a ∩ ↑n = {top} holds no member's up-set unless {top} is a member,
    // which would have been least.
    return !contains(just_a);
  }
  // Only {a, n} is unbounded: a pair {a, n} and a member {m} need some {k}
  // with k ≥ n for arbitrarily large n.
  for (const auto& part : parts) {
    if (part.kind == E1FamilyPart::Kind::NatRange && !(part.hi && *part.hi < part.lo)) return false;
    if (part.kind == E1FamilyPart::Kind::Literal && part.literal->size() == 1 &&
        part.literal->members()[0].is_nat()) {
      return false;
    }
  }
  // {a} as a member would be least; {top} likewise.
  return true;
}

std::vector<FinSet> E1Family::sample(std::uint64_t bound) const {
  const Dcpo d = Dcpo::example_one();
  std::vector<FinSet> out;
  for (const auto& part : parts) {
    if (part.kind == E1FamilyPart::Kind::Literal) {
      out.push_back(*part.literal);
      continue;
    }
    const std::uint64_t hi = part.hi ? std::min(*part.hi, bound) : bound;
    for (std::uint64_t n = part.lo; n <= hi; ++n) {
      if (part.kind == E1FamilyPart::Kind::NatRange) {
        out.push_back(FinSet::single(d, Elem::nat(n)));
      } else {
        out.push_back(FinSet::make(d, {Elem::a(), Elem::nat(n)}));
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::uint64_t E1Family::max_mentioned() const {
  std::uint64_t m = 0;
  for (const auto& part : parts) {
    m = std::max(m, part.lo);
    if (part.hi) m = std::max(m, *part.hi);
    if (part.literal) {
      for (Elem e : part.literal->members()) {
        if (e.is_nat()) m = std::max(m, e.code);
      }
    }
  }
  return m;
}

std::string E1Family::to_string() const {
  std::string out;
  for (const auto& part : parts) {
    if (!out.empty()) out += " ∪ ";
    std::string range = "n in [" + std::to_string(part.lo) + ", " +
                        (part.hi ? std::to_string(*part.hi) : std::string("inf")) + "]";
    switch (part.kind) {
      case E1FamilyPart::Kind::NatRange: out += "{{n} : " + range + "}"; break;
      case E1FamilyPart::Kind::APairRange: out += "{{a, n} : " + range + "}"; break;
      case E1FamilyPart::Kind::Literal: {
        out += "{{";
        bool first = true;
        for (Elem e : part.literal->members()) {
          if (!first) out += ", ";
          out += example_one::format(e);
          first = false;
        }
        out += "}}";
        break;
      }
    }
  }
  return out.empty() ? "∅" : out;
}

FinFamily::FinFamily(std::vector<FinSet> sets) {
  std::sort(sets.begin(), sets.end(), [](const FinSet& a, const FinSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  rep_ = std::move(sets);
}

const std::vector<FinSet>& FinFamily::sets() const {
  if (const auto* v = std::get_if<std::vector<FinSet>>(&rep_)) return *v;
  throw Error(ErrorKind::BackendUnsupported, "family is a symbolic schema");
}

const E1Family& FinFamily::schema() const {
  if (const auto* s = std::get_if<E1Family>(&rep_)) return *s;
  throw Error(ErrorKind::BackendUnsupported, "family is explicit");
}

bool FinFamily::contains(const FinSet& f) const {
  if (is_explicit()) {
    const auto& v = sets();
    return std::find(v.begin(), v.end(), f) != v.end();
  }
  return schema().contains(f);
}

// ---------------------------------------------------------------------------
// Relations

SetRep up_of(const Dcpo& d, const FinSet& f) { return d.up_closure(d.of(f.members())); }

bool is_smyth_directed(const Dcpo& d, const FinFamily& family) {
  if (!family.is_explicit()) return family.schema().is_smyth_directed();
  const auto& sets = family.sets();
  if (sets.empty()) return false;
  std::vector<SetRep> ups;
  ups.reserve(sets.size());
  for (const auto& f : sets) ups.push_back(up_of(d, f));
  for (std::size_t i = 0; i < ups.size(); ++i) {
    for (std::size_t j = i + 1; j < ups.size(); ++j) {
      const SetRep both = d.intersect(ups[i], ups[j]);
      bool found = std::any_of(ups.begin(), ups.end(), [&](const SetRep& h) { return d.subset_of(h, both); });
      if (!found) return false;
    }
  }
  return true;
}

bool smyth_leq(const Dcpo& d, const FinSet& g, const FinSet& h) {
  return d.subset_of(up_of(d, h), up_of(d, g));
}

bool set_way_below(const Dcpo& d, const FinSet& g, const FinSet& h) {
  if (d.is_finite()) {
    const FinitePoset& p = d.poset();
    const Mask up_g = p.up_closure(g.mask());
    const Mask up_h = p.up_closure(h.mask());
    bool ok = true;
    for_each_directed_subset(p, [&](Mask dir) {
      if (!ok) return;
      const std::size_t sup = *p.greatest(dir);
      if (has(up_h, sup) && (dir & up_g) == 0) ok = false;
    });
    return ok;
  }
  // ExampleOne: ↑H ⊆ ↑G, G holds a natural (so ascending chains in N with
  // supremum top meet ↑G), and a ∈ H forces a ∈ G (D = {a}).
  const bool g_has_nat = nat_member(g).has_value();
  const bool a_ok = !h.contains(Elem::a()) || g.contains(Elem::a());
  return g_has_nat && a_ok && e1_up(h).subset_of(e1_up(g));
}

bool point_way_below(const Dcpo& d, Elem x, Elem y) {
  return set_way_below(d, FinSet::single(d, x), FinSet::single(d, y));
}

SetRep waydown(const Dcpo& d, Elem x) {
  d.validate(x);
  if (d.is_finite()) {
    Mask out = 0;
    for (std::size_t y = 0; y < d.poset().size(); ++y) {
      if (point_way_below(d, Elem::id(y), x)) out |= bit(y);
    }
    return SetRep(out);
  }
  if (x.is_a()) return SetRep(E1Set::empty());
  if (x.is_top()) return SetRep(E1Set::nats_from(0));
  return SetRep(E1Set::nats_from(0).minus(E1Set::nats_from(x.code + 1)));
}

FinFamily fin_of(const Dcpo& d, Elem x) {
  d.validate(x);
  if (d.is_finite()) {
    std::vector<FinSet> out;
    const FinSet target = FinSet::single(d, x);
    for (Mask f : antichains(d.poset())) {
      FinSet fs = FinSet::from_mask(d, f);
      if (set_way_below(d, fs, target)) out.push_back(std::move(fs));
    }
    return FinFamily(std::move(out));
  }
  using K = E1FamilyPart::Kind;
  E1Family fam;
  if (x.is_a()) {
    fam.parts.push_back({K::APairRange, 0, std::nullopt, std::nullopt});
  } else if (x.is_top()) {
    fam.parts.push_back({K::NatRange, 0, std::nullopt, std::nullopt});
    fam.parts.push_back({K::APairRange, 0, std::nullopt, std::nullopt});
  } else {
    fam.parts.push_back({K::NatRange, 0, x.code, std::nullopt});
    fam.parts.push_back({K::APairRange, 0, x.code, std::nullopt});
  }
  return FinFamily(std::move(fam));
}

SetRep way_up(const Dcpo& d, const FinSet& f) {
  if (d.is_finite()) {
    Mask out = 0;
    for (std::size_t x = 0; x < d.poset().size(); ++x) {
      if (set_way_below(d, f, FinSet::single(d, Elem::id(x)))) out |= bit(x);
    }
    return SetRep(out);
  }
  auto n = nat_member(f);
  if (!n) return SetRep(E1Set::empty());
  return SetRep(E1Set({}, *n, f.contains(Elem::a()), true));
}

// ---------------------------------------------------------------------------
// Classification

std::vector<Mask> antichains(const FinitePoset& p) {
  if (p.size() > 20) throw Error(ErrorKind::TooLarge, "antichain enumeration limited to 20 elements");
  std::vector<Mask> out;
  const Mask all = p.all();
  for (Mask s = 1; s <= all && s != 0; ++s) {
    if (p.is_antichain(s)) out.push_back(s);
  }
  return out;
}

namespace {

ClassifyReport classify_finite(const Dcpo& d) {
  const FinitePoset& p = d.poset();
  if (p.size() > 16) throw Error(ErrorKind::TooLarge, "classify brute force limited to 16 elements");
  ClassifyReport r;
  const std::size_t n = p.size();

  r.is_dcpo = true;
  for (Mask s = 1; s <= p.all() && s != 0; ++s) {
    if (is_directed_pairwise(p, s) && !p.least_upper_bound(s)) {
      r.is_dcpo = false;
      r.dcpo_witness = ClassifyWitness{std::nullopt, SetRep(s), "directed set without supremum"};
      break;
    }
  }

  r.is_continuous = true;
  for (std::size_t x = 0; x < n && r.is_continuous; ++x) {
    const Mask wd = waydown(d, Elem::id(x)).bits();
    auto sup = p.least_upper_bound(wd);
    if (!is_directed_pairwise(p, wd) || !sup || *sup != x) {
      r.is_continuous = false;
      r.continuous_witness = ClassifyWitness{Elem::id(x), std::nullopt, "waydown not directed with supremum x"};
    }
  }

  r.is_quasi_continuous = true;
  for (std::size_t x = 0; x < n && r.is_quasi_continuous; ++x) {
    const FinFamily fin = fin_of(d, Elem::id(x));
    Mask meet = p.all();
    for (const auto& f : fin.sets()) meet &= p.up_closure(f.mask());
    if (!is_smyth_directed(d, fin) || meet != p.up(x)) {
      r.is_quasi_continuous = false;
      r.quasi_continuous_witness = ClassifyWitness{Elem::id(x), std::nullopt, "fin(x) fails"};
    }
  }

  r.is_meet_continuous = true;
  const std::vector<Mask> opens = scott_topology(p, Exec::Serial).opens();
  for (std::size_t x = 0; x < n && r.is_meet_continuous; ++x) {
    for (Mask u : opens) {
      const Mask lifted = p.up_closure(u & p.down(x));
      if (!is_scott_open(d, SetRep(lifted))) {
        r.is_meet_continuous = false;
        r.meet_continuous_witness = ClassifyWitness{Elem::id(x), SetRep(u), "↑(U ∩ ↓x) not Scott-open"};
        break;
      }
    }
  }
  return r;
}

ClassifyReport classify_example_one(const Dcpo& d) {
  ClassifyReport r;
  r.is_dcpo = true;  // directed sets are chains in N, {a}, or contain top

  // Representative points: a prefix of N plus a and top.
  std::vector<Elem> points;
  for (std::uint64_t k = 0; k <= 8; ++k) points.push_back(Elem::nat(k));
  points.push_back(Elem::a());
  points.push_back(Elem::top());

  r.is_continuous = true;
  for (Elem x : points) {
    const E1Set wd = waydown(d, x).symbolic();
    const SetRep wd_rep(wd);
    if (!d.is_directed(wd_rep) || d.directed_sup(wd_rep) != x) {
      r.is_continuous = false;
      r.continuous_witness = ClassifyWitness{x, std::nullopt, "waydown(x) = " + wd.to_string()};
      break;
    }
  }

  r.is_quasi_continuous = true;
  for (Elem x : points) {
    const FinFamily fin = fin_of(d, x);
    if (!fin.schema().is_smyth_directed() || SetRep(fin.schema().intersection_of_upsets()) != d.up(x)) {
      r.is_quasi_continuous = false;
      r.quasi_continuous_witness = ClassifyWitness{x, std::nullopt, "fin(x) fails"};
      break;
    }
  }

  // Scott-open candidates: L first, then tails with and without a, then ∅.
  std::vector<E1Set> opens{E1Set::all()};
  for (std::uint64_t k = 0; k <= 4; ++k) {
    opens.push_back(E1Set({}, k, false, true));
    opens.push_back(E1Set({}, k, true, true));
  }
  opens.push_back(E1Set::empty());
  r.is_meet_continuous = true;
  for (Elem x : points) {
    for (const auto& u : opens) {
      const SetRep lifted = d.up_closure(d.intersect(SetRep(u), d.down(x)));
      if (!is_scott_open(d, lifted)) {
        r.is_meet_continuous = false;
        r.meet_continuous_witness =
            ClassifyWitness{x, SetRep(u), "↑(U ∩ ↓x) = " + lifted.symbolic().to_string() + " not Scott-open"};
        break;
      }
    }
    if (!r.is_meet_continuous) break;
  }
  return r;
}

}  // namespace

ClassifyReport classify(const Dcpo& d) {
  ClassifyReport r = d.is_finite() ? classify_finite(d) : classify_example_one(d);
  if (r.is_continuous != (r.is_quasi_continuous && r.is_meet_continuous)) {
    throw Error(ErrorKind::Internal, "continuity disagrees with quasi-continuity ∧ meet-continuity on " + d.name());
  }
  return r;
}

FinSet interpolate(const Dcpo& d, const FinSet& h, Elem x) {
  d.validate(x);
  const FinSet target = FinSet::single(d, x);
  if (!classify(d).is_quasi_continuous) {
    throw Error(ErrorKind::NotQuasiContinuous, d.name() + " is not quasi-continuous");
  }
  if (!set_way_below(d, h, target)) {
    throw Error(ErrorKind::PreconditionFailed, "H is not way below " + d.format(x));
  }
  FinSet f = target;
  if (d.is_example_one()) {
    const std::uint64_t next = *nat_member(h) + 1;
    if (x.is_a()) {
      f = FinSet::make(d, {Elem::a(), Elem::nat(next)});
    } else if (x.is_top()) {
      f = FinSet::single(d, Elem::nat(next));
    }
  }
  if (!set_way_below(d, h, f) || !set_way_below(d, f, target)) {
    throw Error(ErrorKind::NoWitness, "no interpolant found for " + d.format(x));
  }
  return f;
}

}  // namespace domaincheck
