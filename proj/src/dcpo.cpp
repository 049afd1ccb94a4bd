#include "domaincheck/dcpo.hpp"

#include <bit>

#include "domaincheck/error.hpp"

namespace domaincheck {

Mask SetRep::bits() const {
  if (const auto* m = std::get_if<Mask>(&rep_)) return *m;
  throw Error(ErrorKind::BackendUnsupported, "expected a finite-backend set");
}

const E1Set& SetRep::symbolic() const {
  if (const auto* s = std::get_if<E1Set>(&rep_)) return *s;
  throw Error(ErrorKind::BackendUnsupported, "expected an ExampleOne set");
}

Dcpo Dcpo::finite(FinitePoset p) {
  return finite(std::make_shared<const FinitePoset>(std::move(p)));
}

Dcpo Dcpo::finite(std::shared_ptr<const FinitePoset> p) {
  Dcpo d;
  d.poset_ = std::move(p);
  return d;
}

Dcpo Dcpo::example_one() { return Dcpo{}; }

const FinitePoset& Dcpo::poset() const {
  if (!poset_) throw Error(ErrorKind::BackendUnsupported, "operation needs a finite poset");
  return *poset_;
}

std::string Dcpo::name() const { return poset_ ? poset_->name() : "exampleone"; }

void Dcpo::validate(Elem x) const {
  if (poset_) {
    if (x.code >= poset_->size()) {
      throw Error(ErrorKind::UnknownElement,
                  "element id " + std::to_string(x.code) + " outside '" + poset_->name() + "'");
    }
  }
  // Every code denotes an ExampleOne element.
}

void Dcpo::validate(const SetRep& s) const {
  if (poset_) {
    if (!subset(s.bits(), poset_->all())) {
      throw Error(ErrorKind::UnknownElement, "set mentions ids outside '" + poset_->name() + "'");
    }
  } else {
    (void)s.symbolic();
  }
}

std::string Dcpo::format(Elem x) const {
  if (poset_) {
    validate(x);
    return poset_->element_name(x.index());
  }
  return example_one::format(x);
}

Elem Dcpo::parse(std::string_view text) const {
  if (poset_) return Elem::id(poset_->index_of(text));
  return example_one::parse(text);
}

bool Dcpo::leq(Elem x, Elem y) const {
  validate(x);
  validate(y);
  if (poset_) return poset_->leq(x.index(), y.index());
  return example_one::leq(x, y);
}

bool Dcpo::contains(const SetRep& s, Elem x) const {
  validate(x);
  if (poset_) return has(s.bits(), x.index());
  return s.symbolic().contains(x);
}

SetRep Dcpo::empty() const {
  if (poset_) return SetRep(Mask{0});
  return SetRep(E1Set::empty());
}

SetRep Dcpo::whole() const {
  if (poset_) return SetRep(poset_->all());
  return SetRep(E1Set::all());
}

SetRep Dcpo::singleton(Elem x) const { return of(std::span<const Elem>(&x, 1)); }

SetRep Dcpo::of(std::span<const Elem> elems) const {
  for (Elem e : elems) validate(e);
  if (poset_) {
    Mask m = 0;
    for (Elem e : elems) m |= bit(e.index());
    return SetRep(m);
  }
  return SetRep(E1Set::of(elems));
}

SetRep Dcpo::unite(const SetRep& a, const SetRep& b) const {
  if (poset_) return SetRep(a.bits() | b.bits());
  return SetRep(a.symbolic().unite(b.symbolic()));
}

SetRep Dcpo::intersect(const SetRep& a, const SetRep& b) const {
  if (poset_) return SetRep(a.bits() & b.bits());
  return SetRep(a.symbolic().intersect(b.symbolic()));
}

SetRep Dcpo::complement(const SetRep& a) const {
  if (poset_) return SetRep(poset_->all() & ~a.bits());
  return SetRep(a.symbolic().complement());
}

bool Dcpo::subset_of(const SetRep& a, const SetRep& b) const {
  if (poset_) return subset(a.bits(), b.bits());
  return a.symbolic().subset_of(b.symbolic());
}

bool Dcpo::is_empty(const SetRep& a) const {
  if (poset_) return a.bits() == 0;
  return a.symbolic().is_empty();
}

SetRep Dcpo::up_closure(const SetRep& s) const {
  validate(s);
  if (poset_) return SetRep(poset_->up_closure(s.bits()));
  const E1Set& in = s.symbolic();
  if (in.is_empty()) return SetRep(E1Set::empty());
  // Everything nonempty reaches top; a natural n reaches every k ≥ n.
  return SetRep(E1Set({}, in.min_nat(), in.has_a(), true));
}

SetRep Dcpo::down_closure(const SetRep& s) const {
  validate(s);
  if (poset_) return SetRep(poset_->down_closure(s.bits()));
  const E1Set& in = s.symbolic();
  if (in.has_top()) return SetRep(E1Set::all());
  if (!in.nat_part_finite()) return SetRep(E1Set({}, 0, in.has_a(), false));
  if (auto hi = in.max_nat()) return SetRep(E1Set({}, std::nullopt, in.has_a(), false).unite(
                                  E1Set::nats_from(0).minus(E1Set::nats_from(*hi + 1))));
  return SetRep(E1Set({}, std::nullopt, in.has_a(), false));
}

bool Dcpo::is_directed(const SetRep& s) const {
  validate(s);
  if (poset_) {
    Mask m = s.bits();
    return m != 0 && poset_->greatest(m).has_value();
  }
  const E1Set& in = s.symbolic();
  if (in.is_empty()) return false;
  if (in.has_top()) return true;
  // Without top, a and a natural have no common upper bound inside S.
  if (in.has_a()) return in.nat_part_empty();
  return true;  // a nonempty set of naturals is a chain
}

Elem Dcpo::directed_sup(const SetRep& s) const {
  if (!is_directed(s)) throw Error(ErrorKind::NotDirected, format(s) + " is not directed");
  if (poset_) return Elem::id(*poset_->greatest(s.bits()));
  const E1Set& in = s.symbolic();
  if (in.has_top() || !in.nat_part_finite()) return Elem::top();
  if (in.has_a()) return Elem::a();
  return Elem::nat(*in.max_nat());
}

std::string Dcpo::format(const SetRep& s) const {
  if (!poset_) return s.symbolic().to_string();
  std::string out = "{";
  bool first = true;
  for (Mask rest = s.bits(); rest != 0; rest &= rest - 1) {
    if (!first) out += ", ";
    out += poset_->element_name(static_cast<std::size_t>(std::countr_zero(rest)));
    first = false;
  }
  return out + "}";
}

std::vector<Elem> Dcpo::elements(const SetRep& s) const {
  std::vector<Elem> out;
  for (Mask rest = s.bits(); rest != 0; rest &= rest - 1) {
    out.push_back(Elem::id(static_cast<std::size_t>(std::countr_zero(rest))));
  }
  return out;
}

void for_each_directed_subset(const FinitePoset& p, const std::function<void(Mask)>& fn) {
  for (std::size_t m = 0; m < p.size(); ++m) {
    const Mask below = p.down(m) & ~bit(m);
    // Enumerate every submask of `below`, including the empty one.
    Mask t = below;
    while (true) {
      fn(t | bit(m));
      if (t == 0) break;
      t = (t - 1) & below;
    }
  }
}

std::vector<Mask> enumerate_directed_subsets(const FinitePoset& p) {
  std::vector<Mask> out;
  for_each_directed_subset(p, [&](Mask s) { out.push_back(s); });
  return out;
}

std::vector<Mask> enumerate_directed_subsets(const Dcpo& d) {
  if (!d.is_finite()) {
    throw Error(ErrorKind::BackendUnsupported, "directed subsets of ExampleOne are infinite");
  }
  return enumerate_directed_subsets(d.poset());
}

bool is_directed_pairwise(const FinitePoset& p, Mask s) {
  if (s == 0) return false;
  for (Mask r1 = s; r1 != 0; r1 &= r1 - 1) {
    auto x = static_cast<std::size_t>(std::countr_zero(r1));
    for (Mask r2 = s; r2 != 0; r2 &= r2 - 1) {
      auto y = static_cast<std::size_t>(std::countr_zero(r2));
      if ((p.up(x) & p.up(y) & s) == 0) return false;
    }
  }
  return true;
}

}  // namespace domaincheck
