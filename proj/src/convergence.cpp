#include "domaincheck/convergence.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "domaincheck/corpus.hpp"
#include "domaincheck/error.hpp"
#include "domaincheck/example_one.hpp"
#include "domaincheck/kernels.hpp"

namespace domaincheck {

// ---------------------------------------------------------------- IndexDcpo

IndexDcpo IndexDcpo::finite(FinitePoset p) {
  if (p.size() == 0 || !p.greatest(p.all())) {
    throw Error(ErrorKind::InvalidNet, "index poset " + p.name() + " has no greatest element");
  }
  IndexDcpo out;
  out.poset_ = std::make_shared<const FinitePoset>(std::move(p));
  return out;
}

const FinitePoset& IndexDcpo::poset() const {
  if (!poset_) throw Error(ErrorKind::BackendUnsupported, "omega index has no finite poset");
  return *poset_;
}

std::size_t IndexDcpo::size() const {
  if (!poset_) throw Error(ErrorKind::BackendUnsupported, "omega index is infinite");
  return poset_->size();
}

std::size_t IndexDcpo::top() const { return *poset().greatest(poset().all()); }

std::string IndexDcpo::name() const { return poset_ ? poset_->name() : "omega"; }

bool operator==(const IndexDcpo& a, const IndexDcpo& b) {
  if (a.is_omega() || b.is_omega()) return a.is_omega() == b.is_omega();
  return a.poset_ == b.poset_ || *a.poset_ == *b.poset_;
}

// ----------------------------------------------------------------- OmegaSet

OmegaSet::OmegaSet(std::uint32_t period, Mask classes, std::vector<std::uint64_t> additions,
                   std::vector<std::uint64_t> removals) {
  if (period == 0) throw Error(ErrorKind::Parse, "residue period must be positive");
  if (period > 64) throw Error(ErrorKind::TooLarge, "residue period above 64");
  classes &= full_mask(period);
  std::sort(additions.begin(), additions.end());
  std::sort(removals.begin(), removals.end());

  auto raw = [&](std::uint64_t j) {
    if (std::binary_search(additions.begin(), additions.end(), j)) return true;
    if (std::binary_search(removals.begin(), removals.end(), j)) return false;
    return has(classes, j % period);
  };
  std::vector<std::uint64_t> points = additions;
  points.insert(points.end(), removals.begin(), removals.end());
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  std::uint32_t q = 1;
  for (; q < period; ++q) {
    if (period % q != 0) continue;
    bool periodic = true;
    for (std::uint32_t r = q; r < period && periodic; ++r) {
      periodic = has(classes, r) == has(classes, r % q);
    }
    if (periodic) break;
  }
  period_ = q;
  classes_ = classes & full_mask(q);
  for (auto j : points) {
    const bool member = raw(j);
    const bool base = has(classes_, j % q);
    if (member && !base) additions_.push_back(j);
    if (!member && base) removals_.push_back(j);
  }
}

OmegaSet OmegaSet::residue(std::uint64_t r, std::uint32_t period) {
  return {period, bit(static_cast<std::size_t>(r % period))};
}

bool OmegaSet::contains(std::uint64_t j) const {
  if (std::binary_search(additions_.begin(), additions_.end(), j)) return true;
  if (std::binary_search(removals_.begin(), removals_.end(), j)) return false;
  return has(classes_, j % period_);
}

template <typename Op>
OmegaSet OmegaSet::combine(const OmegaSet& o, Op op) const {
  const auto l = std::lcm(period_, o.period_);
  if (l > 64) throw Error(ErrorKind::TooLarge, "combined residue period above 64");
  Mask classes = 0;
  for (std::uint32_t r = 0; r < l; ++r) {
    if (op(has(classes_, r % period_), has(o.classes_, r % o.period_))) classes |= bit(r);
  }
  std::vector<std::uint64_t> points;
  for (const auto* s : {this, &o}) {
    points.insert(points.end(), s->additions_.begin(), s->additions_.end());
    points.insert(points.end(), s->removals_.begin(), s->removals_.end());
  }
  std::vector<std::uint64_t> adds;
  std::vector<std::uint64_t> rems;
  for (auto j : points) (op(contains(j), o.contains(j)) ? adds : rems).push_back(j);
  return {static_cast<std::uint32_t>(l), classes, std::move(adds), std::move(rems)};
}

OmegaSet OmegaSet::unite(const OmegaSet& o) const {
  return combine(o, [](bool a, bool b) { return a || b; });
}

OmegaSet OmegaSet::intersect(const OmegaSet& o) const {
  return combine(o, [](bool a, bool b) { return a && b; });
}

OmegaSet OmegaSet::complement() const {
  return {period_, ~classes_ & full_mask(period_), removals_, additions_};
}

std::string OmegaSet::to_string() const {
  if (is_empty()) return "{}";
  std::ostringstream out;
  auto list = [&](const std::vector<std::uint64_t>& xs) {
    out << '{';
    for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? "," : "") << xs[i];
    out << '}';
  };
  if (classes_ != 0) {
    out << '[';
    bool first = true;
    for (std::uint32_t r = 0; r < period_; ++r) {
      if (!has(classes_, r)) continue;
      out << (first ? "" : ",") << r;
      first = false;
    }
    out << " mod " << period_ << ']';
    if (!additions_.empty()) {
      out << " + ";
      list(additions_);
    }
    if (!removals_.empty()) {
      out << " - ";
      list(removals_);
    }
  } else {
    list(additions_);
  }
  return out.str();
}

// -------------------------------------------------------------------- Ideal

std::string to_string(IdealKind k) {
  switch (k) {
    case IdealKind::Eventual: return "eventual";
    case IdealKind::FiniteSets: return "finite";
    case IdealKind::DensityZero: return "density0";
    case IdealKind::TrivialAll: return "trivial";
  }
  return "?";
}

IdealKind parse_ideal_kind(std::string_view text) {
  if (text == "eventual") return IdealKind::Eventual;
  if (text == "finite") return IdealKind::FiniteSets;
  if (text == "density0") return IdealKind::DensityZero;
  if (text == "trivial") return IdealKind::TrivialAll;
  throw Error(ErrorKind::Parse, "unknown ideal kind '" + std::string(text) + "'");
}

Ideal Ideal::make(IdealKind kind, IndexDcpo index) {
  if (!index.is_omega() && (kind == IdealKind::FiniteSets || kind == IdealKind::DensityZero)) {
    throw Error(ErrorKind::IndexMismatch,
                "ideal '" + to_string(kind) + "' needs the omega index, got " + index.name());
  }
  return {kind, std::move(index)};
}

bool ideal_member(const Ideal& ideal, const IndexSet& a) {
  if (ideal.index().is_omega() != std::holds_alternative<OmegaSet>(a)) {
    throw Error(ErrorKind::IndexMismatch, "index set and ideal live on different index posets");
  }
  if (ideal.is_trivial()) return true;
  if (const auto* o = std::get_if<OmegaSet>(&a)) return o->is_finite();
  // Eventual on a finite directed J: A misses some ↑j, and ↑top is the
  // smallest residual set.
  return !has(std::get<Mask>(a), ideal.index().top());
}

// ---------------------------------------------------------------------- Net

Net Net::finite(IndexDcpo index, std::vector<Elem> values) {
  if (index.is_omega()) throw Error(ErrorKind::InvalidNet, "finite net needs a finite index");
  if (values.size() != index.size()) {
    throw Error(ErrorKind::InvalidNet, "net assigns " + std::to_string(values.size()) +
                                           " values over an index of " +
                                           std::to_string(index.size()) + " points");
  }
  Net out;
  out.index_ = std::move(index);
  out.values_ = std::move(values);
  return out;
}

Net Net::omega(std::vector<Track> tracks) {
  if (tracks.empty() || tracks.size() > 64) {
    throw Error(ErrorKind::InvalidNet, "omega net needs between 1 and 64 tracks");
  }
  Net out;
  out.tracks_ = std::move(tracks);
  return out;
}

void Net::validate(const Dcpo& d) const {
  try {
    for (auto v : values_) d.validate(v);
    for (const auto& t : tracks_) {
      if (t.kind == Track::Kind::Ascend) {
        if (!d.is_example_one()) {
          throw Error(ErrorKind::InvalidNet, "ascending track needs the exampleone backend");
        }
      } else {
        d.validate(t.value);
      }
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::InvalidNet) throw;
    throw Error(ErrorKind::InvalidNet, e.what());
  }
}

std::uint64_t Net::stable_bound() const {
  std::uint64_t bound = 0;
  auto see = [&](Elem e) {
    if (e.is_nat()) bound = std::max(bound, e.code + 1);
  };
  for (auto v : values_) see(v);
  for (const auto& t : tracks_) {
    if (t.kind == Track::Kind::Const) see(t.value);
  }
  return bound;
}

std::string Net::to_string(const Dcpo& d) const {
  std::ostringstream out;
  if (is_omega()) {
    out << "omega/" << tracks_.size() << "(";
    for (std::size_t r = 0; r < tracks_.size(); ++r) {
      out << (r ? ", " : "")
          << (tracks_[r].kind == Track::Kind::Ascend ? "ascend" : d.format(tracks_[r].value));
    }
    out << ")";
    return out.str();
  }
  const auto& j = index_.poset();
  out << j.name() << "(";
  for (std::size_t i = 0; i < values_.size(); ++i) {
    out << (i ? ", " : "") << j.element_name(i) << "->" << d.format(values_[i]);
  }
  out << ")";
  return out.str();
}

IndexSet level_set(const Dcpo& d, const Net& net, const SetRep& s) {
  d.validate(s);
  if (!net.is_omega()) {
    Mask out = 0;
    for (std::size_t j = 0; j < net.values().size(); ++j) {
      if (!d.contains(s, net.values()[j])) out |= bit(j);
    }
    return out;
  }
  const auto p = static_cast<std::uint32_t>(net.period());
  Mask classes = 0;
  std::vector<std::uint64_t> adds;
  std::vector<std::uint64_t> rems;
  for (std::uint32_t r = 0; r < p; ++r) {
    const Track& t = net.tracks()[r];
    if (t.kind == Track::Kind::Const) {
      if (!d.contains(s, t.value)) classes |= bit(r);
      continue;
    }
    if (!d.is_example_one()) {
      throw Error(ErrorKind::NonRepresentableSet, "ascending track outside exampleone");
    }
    // x_{pk+r} = k.
    const E1Set& in = s.symbolic();
    if (auto tail = in.tail_start()) {
      for (std::uint64_t k = 0; k < *tail; ++k) {
        if (!in.contains_nat(k)) adds.push_back(p * k + r);
      }
    } else {
      classes |= bit(r);
      for (auto k : in.finite_nats()) rems.push_back(p * k + r);
    }
  }
  return OmegaSet(p, classes, std::move(adds), std::move(rems));
}

// ----------------------------------------------------------------- checkers

namespace {

bool level_ok(const Dcpo& d, const Net& net, const Ideal& ideal, const SetRep& s) {
  return ideal_member(ideal, level_set(d, net, s));
}

bool up_ok(const Dcpo& d, const Net& net, const Ideal& ideal, const FinSet& f) {
  return level_ok(d, net, ideal, up_of(d, f));
}

FinSet nat_set(const Dcpo& d, std::uint64_t n) { return FinSet::single(d, Elem::nat(n)); }
FinSet apair_set(const Dcpo& d, std::uint64_t n) {
  return FinSet::make(d, {Elem::a(), Elem::nat(n)});
}

// Level sets of ↑{n} and ↑{a, n} grow with n and are decided past the stable
// bound, so a whole range passes iff its largest relevant member does.
bool range_ok(const Dcpo& d, const Net& net, const Ideal& ideal, const E1FamilyPart& part) {
  if (part.kind == E1FamilyPart::Kind::Literal) return up_ok(d, net, ideal, *part.literal);
  const std::uint64_t n = part.hi ? *part.hi : std::max(part.lo, net.stable_bound());
  return part.kind == E1FamilyPart::Kind::NatRange ? up_ok(d, net, ideal, nat_set(d, n))
                                                   : up_ok(d, net, ideal, apair_set(d, n));
}

// Largest n (if any) with ↑{n} (or ↑{a, n}) passing; nullopt-inner means
// unbounded.
struct RangeBound {
  bool any = false;
  std::optional<std::uint64_t> hi;
};

RangeBound passing_range(const Dcpo& d, const Net& net, const Ideal& ideal, bool with_a) {
  auto ok = [&](std::uint64_t n) {
    return up_ok(d, net, ideal, with_a ? apair_set(d, n) : nat_set(d, n));
  };
  const std::uint64_t bound = net.stable_bound();
  if (ok(bound)) return {true, std::nullopt};
  for (std::uint64_t n = bound; n-- > 0;) {
    if (ok(n)) return {true, n};
  }
  return {};
}

E1FamilyPart nat_range(std::uint64_t lo, std::optional<std::uint64_t> hi) {
  return {E1FamilyPart::Kind::NatRange, lo, hi, std::nullopt};
}

E1FamilyPart apair_range(std::uint64_t lo, std::optional<std::uint64_t> hi) {
  return {E1FamilyPart::Kind::APairRange, lo, hi, std::nullopt};
}

E1FamilyPart literal(FinSet f) { return {E1FamilyPart::Kind::Literal, 0, std::nullopt, f}; }

void check_same_index(const Net& net, const Ideal& ideal) {
  if (!(net.index() == ideal.index())) {
    throw Error(ErrorKind::IndexMismatch,
                "net index " + net.index().name() + " differs from ideal index " +
                    ideal.index().name());
  }
}

}  // namespace

ConvergenceVerdict converges_IS(const Dcpo& d, const Net& net, Elem x, const Ideal& ideal) {
  d.validate(x);
  net.validate(d);
  check_same_index(net, ideal);
  ConvergenceVerdict v;
  if (d.is_finite()) {
    // A finite directed set may be replaced by its greatest element.
    for (auto m : d.elements(d.up(x))) {
      if (level_ok(d, net, ideal, d.up(m))) {
        v.holds = true;
        v.directed = d.singleton(m);
        return v;
      }
    }
    v.note = "no m >= x has its up-set level set in the ideal";
    return v;
  }
  if (level_ok(d, net, ideal, d.up(x))) {
    v.holds = true;
    v.directed = d.singleton(x);
    return v;
  }
  const auto bound = net.stable_bound();
  if (level_ok(d, net, ideal, d.up(Elem::nat(bound)))) {
    v.holds = true;
    v.directed = SetRep(E1Set::nats_from(0));
    return v;
  }
  v.note = "D = {" + d.format(x) + "} fails at " + d.format(x) + "; D = N fails at " +
           std::to_string(bound);
  return v;
}

ConvergenceVerdict converges_GIS(const Dcpo& d, const Net& net, Elem x, const Ideal& ideal) {
  d.validate(x);
  net.validate(d);
  check_same_index(net, ideal);
  ConvergenceVerdict v;
  const FinSet single = FinSet::single(d, x);
  if (up_ok(d, net, ideal, single)) {
    v.holds = true;
    v.family = d.is_finite() ? FinFamily(std::vector<FinSet>{single})
                             : FinFamily(E1Family{{literal(single)}});
    return v;
  }
  if (d.is_finite()) {
    v.note = "level set of up(x) is not in the ideal";
    return v;
  }
  const auto bound = net.stable_bound();
  if (x.is_a() && up_ok(d, net, ideal, apair_set(d, bound))) {
    v.holds = true;
    v.family = FinFamily(E1Family{{apair_range(0, std::nullopt)}});
    return v;
  }
  if (up_ok(d, net, ideal, nat_set(d, bound))) {
    v.holds = true;
    v.family = FinFamily(E1Family{{nat_range(0, std::nullopt)}});
    return v;
  }
  v.note = "{{" + d.format(x) + "}} fails; {{n}} fails at n = " + std::to_string(bound);
  if (x.is_a()) v.note += "; {{a, n}} fails at n = " + std::to_string(bound);
  return v;
}

ConvergenceVerdict converges_topological(const Dcpo& d, const Net& net, Elem x, const Ideal& ideal,
                                         const Topology& t) {
  d.validate(x);
  net.validate(d);
  check_same_index(net, ideal);
  ConvergenceVerdict v;
  std::vector<SetRep> neighbourhoods;
  if (d.is_finite()) {
    if (!t.is_finite() || t.carrier_size() != d.poset().size()) {
      throw Error(ErrorKind::PreconditionFailed, "topology carrier does not match the poset");
    }
    for (Mask u : t.opens()) {
      if (has(u, x.index())) neighbourhoods.emplace_back(u);
    }
  } else {
    if (t.is_finite()) throw Error(ErrorKind::BackendUnsupported, "finite topology on exampleone");
    const auto n = net.stable_bound();
    const E1Set tail_top = E1Set::nats_from(n).unite(E1Set::singleton(Elem::top()));
    switch (t.kind()) {
      case TopologyKind::Scott:
        if (x.is_nat()) {
          neighbourhoods.emplace_back(E1Set::nats_from(x.code).unite(E1Set::singleton(Elem::top())));
        } else {
          neighbourhoods.emplace_back(x.is_a() ? tail_top.unite(E1Set::singleton(Elem::a()))
                                               : tail_top);
        }
        break;
      case TopologyKind::Lower:
        if (x.is_nat()) {
          std::vector<std::uint64_t> prefix(x.code + 1);
          std::iota(prefix.begin(), prefix.end(), 0);
          neighbourhoods.emplace_back(E1Set(prefix, std::nullopt, false, false));
        } else {
          neighbourhoods.emplace_back(x.is_a() ? E1Set::singleton(x) : E1Set::all());
        }
        break;
      case TopologyKind::Lawson:
        neighbourhoods.emplace_back(x.is_top() ? tail_top : E1Set::singleton(x));
        break;
      default:
        throw Error(ErrorKind::BackendUnsupported,
                    "topology " + std::string(to_string(t.kind())) + " on exampleone");
    }
  }
  for (const auto& u : neighbourhoods) {
    if (!level_ok(d, net, ideal, u)) {
      v.open_set = u;
      v.note = "level set of " + d.format(u) + " escapes the ideal";
      return v;
    }
  }
  v.holds = true;
  return v;
}

FinFamily gi_family(const Dcpo& d, const Net& net, const Ideal& ideal) {
  net.validate(d);
  check_same_index(net, ideal);
  if (d.is_finite()) {
    std::vector<FinSet> out;
    for (Mask f : antichains(d.poset())) {
      if (f == 0) continue;
      FinSet fs = FinSet::from_mask(d, f);
      if (up_ok(d, net, ideal, fs)) out.push_back(std::move(fs));
    }
    return FinFamily(std::move(out));
  }
  E1Family schema;
  if (auto r = passing_range(d, net, ideal, false); r.any) schema.parts.push_back(nat_range(0, r.hi));
  if (auto r = passing_range(d, net, ideal, true); r.any) schema.parts.push_back(apair_range(0, r.hi));
  for (Elem e : {Elem::a(), Elem::top()}) {
    FinSet f = FinSet::single(d, e);
    if (up_ok(d, net, ideal, f)) schema.parts.push_back(literal(std::move(f)));
  }
  return FinFamily(std::move(schema));
}

ConvergenceVerdict is_gi_liminf(const Dcpo& d, const Net& net, Elem x, const Ideal& ideal) {
  ConvergenceVerdict v = converges_GIS(d, net, x, ideal);
  if (!v.holds) return v;
  const FinFamily gi = gi_family(d, net, ideal);
  auto fail = [&](FinSet f) {
    v.holds = false;
    v.note = d.format(x) + " is not above a member of the GI family";
    v.failing_member = std::move(f);
    return v;
  };
  if (gi.is_explicit()) {
    for (const auto& f : gi.sets()) {
      if (!d.contains(up_of(d, f), x)) return fail(f);
    }
    return v;
  }
  for (const auto& part : gi.schema().parts) {
    switch (part.kind) {
      case E1FamilyPart::Kind::Literal:
        if (!d.contains(up_of(d, *part.literal), x)) return fail(*part.literal);
        break;
      case E1FamilyPart::Kind::NatRange:
        if (x.is_top()) break;
        if (x.is_a()) return fail(nat_set(d, part.lo));
        if (!part.hi) return fail(nat_set(d, std::max(part.lo, x.code + 1)));
        if (x.code < *part.hi) return fail(nat_set(d, *part.hi));
        break;
      case E1FamilyPart::Kind::APairRange:
        if (!x.is_nat()) break;
        if (!part.hi) return fail(apair_set(d, std::max(part.lo, x.code + 1)));
        if (x.code < *part.hi) return fail(apair_set(d, *part.hi));
        break;
    }
  }
  return v;
}

bool check_is_witness(const Dcpo& d, const Net& net, Elem x, const Ideal& ideal, const SetRep& dir) {
  if (!d.is_directed(dir) || !d.leq(x, d.directed_sup(dir))) return false;
  if (d.is_finite()) {
    for (auto m : d.elements(dir)) {
      if (!level_ok(d, net, ideal, d.up(m))) return false;
    }
    return true;
  }
  const E1Set& s = dir.symbolic();
  for (auto k : s.finite_nats()) {
    if (!level_ok(d, net, ideal, d.up(Elem::nat(k)))) return false;
  }
  if (auto tail = s.tail_start()) {
    const auto n = std::max(*tail, net.stable_bound());
    if (!level_ok(d, net, ideal, d.up(Elem::nat(n)))) return false;
  }
  for (Elem e : {Elem::a(), Elem::top()}) {
    if (s.contains(e) && !level_ok(d, net, ideal, d.up(e))) return false;
  }
  return true;
}

bool check_gis_witness(const Dcpo& d, const Net& net, Elem x, const Ideal& ideal,
                       const FinFamily& family) {
  if (!is_smyth_directed(d, family)) return false;
  if (family.is_explicit()) {
    SetRep meet = d.whole();
    for (const auto& f : family.sets()) {
      if (!up_ok(d, net, ideal, f)) return false;
      meet = d.intersect(meet, up_of(d, f));
    }
    return d.subset_of(meet, d.up(x));
  }
  const E1Family& schema = family.schema();
  for (const auto& part : schema.parts) {
    if (!range_ok(d, net, ideal, part)) return false;
  }
  return d.subset_of(SetRep(schema.intersection_of_upsets()), d.up(x));
}

// ------------------------------------------------------- derived topologies

std::string to_string(ConvergenceMode m) {
  switch (m) {
    case ConvergenceMode::IS: return "is";
    case ConvergenceMode::GIS: return "gis";
    case ConvergenceMode::GI: return "gi";
  }
  return "?";
}

std::vector<NetWithIdeal> enumerate_net_class(const FinitePoset& p, const NetClassConfig& config) {
  if (!config.include_constant_nets) {
    throw Error(ErrorKind::NetClassTooSmall, "the net class must contain every constant net");
  }
  const std::size_t n = p.size();
  std::vector<NetWithIdeal> out;
  for (const auto& j : directed_index_posets(config.max_index_points)) {
    const IndexDcpo index = IndexDcpo::finite(j);
    const Ideal ideal = Ideal::make(config.finite_ideal, index);
    std::vector<Elem> values(j.size(), Elem::id(0));
    // Odometer over all maps J -> P.
    while (true) {
      out.push_back({Net::finite(index, values), ideal});
      std::size_t k = 0;
      while (k < values.size() && values[k].code + 1 == n) values[k++] = Elem::id(0);
      if (k == values.size()) break;
      values[k] = Elem::id(values[k].code + 1);
    }
  }
  const Ideal omega_ideal = Ideal::make(config.omega_ideal, IndexDcpo::omega());
  const std::size_t max_period = std::max<std::size_t>(config.max_omega_period, 1);
  for (std::size_t period = 1; period <= max_period; ++period) {
    std::vector<Track> tracks(period, Track::constant(Elem::id(0)));
    while (true) {
      out.push_back({Net::omega(tracks), omega_ideal});
      std::size_t k = 0;
      while (k < period && tracks[k].value.code + 1 == n) tracks[k++] = Track::constant(Elem::id(0));
      if (k == period) break;
      tracks[k] = Track::constant(Elem::id(tracks[k].value.code + 1));
    }
  }
  return out;
}

Topology derive_convergence_topology(const FinitePoset& p, ConvergenceMode mode,
                                     std::span<const NetWithIdeal> nets, Exec exec) {
  const Dcpo d = Dcpo::finite(p);
  const std::size_t n = p.size();
  std::vector<kernels::LimitConstraint> constraints(nets.size());
  parallel_for(exec, nets.size(), [&](std::size_t i) {
    const auto& [net, ideal] = nets[i];
    kernels::LimitConstraint c;
    for (std::size_t y = 0; y < n; ++y) {
      if (!level_ok(d, net, ideal, SetRep(p.all() & ~bit(y)))) c.required |= bit(y);
    }
    std::optional<FinFamily> gi;
    for (std::size_t x = 0; x < n; ++x) {
      const Elem e = Elem::id(x);
      bool converges = false;
      switch (mode) {
        case ConvergenceMode::IS: converges = converges_IS(d, net, e, ideal).holds; break;
        case ConvergenceMode::GIS: converges = converges_GIS(d, net, e, ideal).holds; break;
        case ConvergenceMode::GI:
          if (converges_GIS(d, net, e, ideal).holds) {
            if (!gi) gi = gi_family(d, net, ideal);
            converges = std::all_of(gi->sets().begin(), gi->sets().end(), [&](const FinSet& f) {
              return has(p.up_closure(f.mask()), x);
            });
          }
          break;
      }
      if (converges) c.limits |= bit(x);
    }
    constraints[i] = c;
  });
  std::sort(constraints.begin(), constraints.end());
  constraints.erase(std::unique(constraints.begin(), constraints.end()), constraints.end());
  auto opens = exec == Exec::Parallel ? kernels::constrained_opens_omp(n, constraints)
                                      : kernels::constrained_opens_serial(n, constraints);
  return Topology::finite(TopologyKind::Derived, n, std::move(opens));
}

Topology derive_convergence_topology(const FinitePoset& p, ConvergenceMode mode,
                                     const NetClassConfig& config, Exec exec) {
  const auto nets = enumerate_net_class(p, config);
  return derive_convergence_topology(p, mode, nets, exec);
}

}  // namespace domaincheck
