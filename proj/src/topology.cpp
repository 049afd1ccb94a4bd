#include "domaincheck/topology.hpp"

#include <algorithm>
#include <set>

#include "domaincheck/error.hpp"
#include "domaincheck/kernels.hpp"

namespace domaincheck {

std::string_view to_string(TopologyKind kind) {
  switch (kind) {
    case TopologyKind::Scott: return "scott";
    case TopologyKind::Lower: return "lower";
    case TopologyKind::Lawson: return "lawson";
    case TopologyKind::Glim: return "glim";
    case TopologyKind::Discrete: return "discrete";
    case TopologyKind::Indiscrete: return "indiscrete";
    case TopologyKind::Derived: return "derived";
  }
  return "unknown";
}

namespace {

constexpr std::size_t kMaxValidatedOpens = 8192;

void require_enumerable(std::size_t n) {
  if (n > 20) throw Error(ErrorKind::TooLarge, "topologies are enumerated up to 20 elements");
}

// Closed forms on ExampleOne.
bool e1_scott_open(const E1Set& s) {
  const Dcpo d = Dcpo::example_one();
  if (d.up_closure(SetRep(s)) != SetRep(s)) return false;
  return !s.has_top() || !s.nat_part_empty();
}

bool e1_lower_open(const E1Set& s) {
  if (s == E1Set::all()) return true;
  if (s.has_top()) return false;
  if (s.cofinite_from()) return *s.cofinite_from() == 0;  // all of N
  // The natural part must be an initial segment {0..m}.
  const auto& nats = s.finite_nats();
  return nats.empty() || nats.back() + 1 == nats.size();
}

bool e1_lawson_open(const E1Set& s) { return !s.has_top() || s.cofinite_from().has_value(); }

E1Set e1_interior(TopologyKind kind, const E1Set& s) {
  switch (kind) {
    case TopologyKind::Scott: {
      if (!s.has_top() || !s.tail_start()) return E1Set::empty();
      return E1Set({}, *s.tail_start(), s.has_a(), true);
    }
    case TopologyKind::Lower: {
      if (s == E1Set::all()) return s;
      E1Set nats;
      if (s.cofinite_from() && *s.cofinite_from() == 0) {
        nats = E1Set::nats_from(0);
      } else {
        std::vector<std::uint64_t> prefix;
        for (std::uint64_t k = 0; s.contains_nat(k); ++k) prefix.push_back(k);
        nats = E1Set(std::move(prefix), std::nullopt, false, false);
      }
      return nats.unite(E1Set({}, std::nullopt, s.has_a(), false));
    }
    case TopologyKind::Lawson: {
      if (e1_lawson_open(s)) return s;
      return s.minus(E1Set::singleton(Elem::top()));
    }
    default:
      throw Error(ErrorKind::BackendUnsupported, "ExampleOne supports scott, lower and lawson only");
  }
}

}  // namespace

Topology Topology::finite(TopologyKind kind, std::size_t carrier_size, std::vector<Mask> opens) {
  require_enumerable(carrier_size);
  std::sort(opens.begin(), opens.end());
  opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
  if (opens.size() > kMaxValidatedOpens) {
    throw Error(ErrorKind::TooLarge, "open-set family too large to validate");
  }
  if (!is_topology_family(carrier_size, opens)) {
    throw Error(ErrorKind::PreconditionFailed,
                std::string(to_string(kind)) + " family is not closed under union and intersection");
  }
  Topology t;
  t.kind_ = kind;
  t.n_ = carrier_size;
  t.opens_ = std::move(opens);
  return t;
}

Topology Topology::example_one(TopologyKind kind) {
  if (kind != TopologyKind::Scott && kind != TopologyKind::Lower && kind != TopologyKind::Lawson) {
    throw Error(ErrorKind::BackendUnsupported, "ExampleOne supports scott, lower and lawson only");
  }
  Topology t;
  t.kind_ = kind;
  t.symbolic_ = true;
  return t;
}

const std::vector<Mask>& Topology::opens() const {
  if (symbolic_) throw Error(ErrorKind::BackendUnsupported, "symbolic topologies have no open list");
  return opens_;
}

bool Topology::is_open(const SetRep& s) const {
  if (!symbolic_) return std::binary_search(opens_.begin(), opens_.end(), s.bits());
  const E1Set& e = s.symbolic();
  switch (kind_) {
    case TopologyKind::Scott: return e1_scott_open(e);
    case TopologyKind::Lower: return e1_lower_open(e);
    case TopologyKind::Lawson: return e1_lawson_open(e);
    default: return false;
  }
}

bool Topology::same_opens(const Topology& other) const {
  return n_ == other.n_ && opens() == other.opens();
}

bool Topology::coarser_than(const Topology& other) const {
  return std::includes(other.opens().begin(), other.opens().end(), opens().begin(), opens().end());
}

bool is_topology_family(std::size_t carrier_size, const std::vector<Mask>& opens) {
  std::vector<Mask> sorted = opens;
  std::sort(sorted.begin(), sorted.end());
  auto present = [&](Mask m) { return std::binary_search(sorted.begin(), sorted.end(), m); };
  if (!present(0) || !present(full_mask(carrier_size))) return false;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = i + 1; j < sorted.size(); ++j) {
      if (!present(sorted[i] | sorted[j]) || !present(sorted[i] & sorted[j])) return false;
    }
  }
  return true;
}

std::vector<Mask> generate_topology(std::size_t carrier_size, const std::vector<Mask>& subbasis) {
  require_enumerable(carrier_size);
  std::set<Mask> basis(subbasis.begin(), subbasis.end());
  basis.insert(full_mask(carrier_size));
  std::vector<Mask> frontier(basis.begin(), basis.end());
  while (!frontier.empty()) {
    std::vector<Mask> next;
    const std::vector<Mask> current(basis.begin(), basis.end());
    for (Mask a : frontier) {
      for (Mask b : current) {
        if (basis.insert(a & b).second) next.push_back(a & b);
      }
    }
    frontier = std::move(next);
  }
  std::vector<Mask> out;
  const std::uint64_t total = std::uint64_t{1} << carrier_size;
  for (std::uint64_t u = 0; u < total; ++u) {
    Mask covered = 0;
    for (Mask b : basis) {
      if (subset(b, u)) covered |= b;
    }
    if (covered == u) out.push_back(u);
  }
  return out;
}

std::vector<Mask> upper_sets(const FinitePoset& p) {
  require_enumerable(p.size());
  std::vector<Mask> out;
  const std::uint64_t total = std::uint64_t{1} << p.size();
  for (std::uint64_t u = 0; u < total; ++u) {
    if (p.is_upper(u)) out.push_back(u);
  }
  return out;
}

Topology scott_topology(const FinitePoset& p, Exec exec) {
  auto opens = exec == Exec::Serial ? kernels::scott_opens_serial(p) : kernels::scott_opens_omp(p);
  if (opens != upper_sets(p)) {
    throw Error(ErrorKind::Internal, "Scott opens differ from upper sets on '" + p.name() + "'");
  }
  return Topology::finite(TopologyKind::Scott, p.size(), std::move(opens));
}

Topology lower_topology(const FinitePoset& p) {
  std::vector<Mask> subbasis;
  for (std::size_t x = 0; x < p.size(); ++x) subbasis.push_back(p.all() & ~p.up(x));
  return Topology::finite(TopologyKind::Lower, p.size(), generate_topology(p.size(), subbasis));
}

Topology lawson_topology(const FinitePoset& p) {
  std::vector<Mask> subbasis = upper_sets(p);
  for (std::size_t x = 0; x < p.size(); ++x) subbasis.push_back(p.all() & ~p.up(x));
  return Topology::finite(TopologyKind::Lawson, p.size(), generate_topology(p.size(), subbasis));
}

Topology discrete_topology(std::size_t carrier_size) {
  require_enumerable(carrier_size);
  std::vector<Mask> all;
  for (std::uint64_t u = 0; u < (std::uint64_t{1} << carrier_size); ++u) all.push_back(u);
  return Topology::finite(TopologyKind::Discrete, carrier_size, std::move(all));
}

Topology indiscrete_topology(std::size_t carrier_size) {
  return Topology::finite(TopologyKind::Indiscrete, carrier_size, {0, full_mask(carrier_size)});
}

bool is_scott_open(const Dcpo& d, const SetRep& s) {
  d.validate(s);
  if (d.is_example_one()) return e1_scott_open(s.symbolic());
  const FinitePoset& p = d.poset();
  const Mask u = s.bits();
  if (!p.is_upper(u)) return false;
  bool ok = true;
  for_each_directed_subset(p, [&](Mask dir) {
    if (ok && has(u, *p.greatest(dir)) && (dir & u) == 0) ok = false;
  });
  return ok;
}

SetRep interior(const Topology& t, const SetRep& s) {
  if (!t.is_finite()) return SetRep(e1_interior(t.kind(), s.symbolic()));
  Mask out = 0;
  for (Mask u : t.opens()) {
    if (subset(u, s.bits())) out |= u;
  }
  return SetRep(out);
}

SetRep closure(const Topology& t, const SetRep& s) {
  if (!t.is_finite()) {
    return SetRep(e1_interior(t.kind(), s.symbolic().complement()).complement());
  }
  const Mask all = full_mask(t.carrier_size());
  return SetRep(all & ~interior(t, SetRep(all & ~s.bits())).bits());
}

GlimDerivation derive_glim_topology_both(const FinitePoset& p, std::size_t family_bound, Exec exec) {
  auto naive = exec == Exec::Serial ? kernels::glim_opens_serial(p, family_bound)
                                    : kernels::glim_opens_omp(p, family_bound);
  auto reduced = upper_sets(p);
  const bool agree = naive == reduced;
  return GlimDerivation{Topology::finite(TopologyKind::Glim, p.size(), std::move(naive)),
                        Topology::finite(TopologyKind::Glim, p.size(), std::move(reduced)), agree};
}

Topology derive_glim_topology(const FinitePoset& p, std::size_t family_bound, Exec exec) {
  auto both = derive_glim_topology_both(p, family_bound, exec);
  if (!both.agree) {
    throw Error(ErrorKind::Internal, "naive and reduced g-lim-inf topologies differ on '" + p.name() + "'");
  }
  return both.reduced;
}

}  // namespace domaincheck
