#include <doctest.h>

#include <functional>
#include <random>
#include <set>
#include <vector>

#include "domaincheck/convergence.hpp"
#include "domaincheck/corpus.hpp"
#include "domaincheck/error.hpp"

using namespace domaincheck;

namespace {

std::optional<ErrorKind> error_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

Net example_net() { return Net::omega({Track::ascend(), Track::constant(Elem::a())}); }

Ideal eventual_omega() { return Ideal::make(IdealKind::Eventual, IndexDcpo::omega()); }

// Value of an Omega net at index j, straight from the track description.
Elem value_at(const Net& net, std::uint64_t j) {
  const Track& t = net.tracks()[j % net.period()];
  return t.kind == Track::Kind::Const ? t.value : Elem::nat(j / net.period());
}

OmegaSet random_omega(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> period(1, 6);
  const std::uint32_t p = period(rng);
  const Mask classes = rng() & full_mask(p);
  std::vector<std::uint64_t> add, rem;
  std::uniform_int_distribution<std::uint64_t> point(0, 40);
  for (int i = 0; i < 3; ++i) {
    add.push_back(point(rng));
    rem.push_back(point(rng));
  }
  // Points on both lists would be ambiguous; keep additions only.
  std::erase_if(rem, [&](std::uint64_t r) { return std::find(add.begin(), add.end(), r) != add.end(); });
  return OmegaSet(p, classes, add, rem);
}

bool brute_in(std::uint32_t p, Mask classes, const std::vector<std::uint64_t>& add,
              const std::vector<std::uint64_t>& rem, std::uint64_t j) {
  if (std::find(add.begin(), add.end(), j) != add.end()) return true;
  if (std::find(rem.begin(), rem.end(), j) != rem.end()) return false;
  return has(classes, j % p);
}

Mask names(const FinitePoset& p, std::initializer_list<const char*> ns) {
  Mask m = 0;
  for (const char* n : ns) m |= bit(p.index_of(n));
  return m;
}

bool converges(const Dcpo& d, ConvergenceMode mode, const Net& net, Elem x, const Ideal& ideal) {
  switch (mode) {
    case ConvergenceMode::IS: return converges_IS(d, net, x, ideal).holds;
    case ConvergenceMode::GIS: return converges_GIS(d, net, x, ideal).holds;
    default: return is_gi_liminf(d, net, x, ideal).holds;
  }
}

// Opens from the defining condition, one (net, point, U) at a time.
std::vector<Mask> direct_opens(const FinitePoset& p, ConvergenceMode mode, const std::vector<NetWithIdeal>& nets) {
  const Dcpo d = Dcpo::finite(p);
  std::vector<Mask> out;
  for (Mask u = 0; u <= p.all(); ++u) {
    bool open = true;
    for (const auto& [net, ideal] : nets) {
      if (!open) break;
      for (std::size_t x = 0; x < p.size() && open; ++x) {
        if (has(u, x) && converges(d, mode, net, Elem::id(x), ideal)) {
          open = ideal_member(ideal, level_set(d, net, SetRep(u)));
        }
      }
    }
    if (open) out.push_back(u);
  }
  return out;
}

}  // namespace

TEST_CASE("omega sets agree with pointwise membership") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 300; ++round) {
    const OmegaSet a = random_omega(rng);
    const OmegaSet b = random_omega(rng);
    const OmegaSet u = a.unite(b);
    const OmegaSet i = a.intersect(b);
    const OmegaSet c = a.complement();
    for (std::uint64_t j = 0; j < 200; ++j) {
      CHECK(u.contains(j) == (a.contains(j) || b.contains(j)));
      CHECK(i.contains(j) == (a.contains(j) && b.contains(j)));
      CHECK(c.contains(j) == !a.contains(j));
    }
    CHECK(c.complement() == a);
    CHECK(a.unite(b).complement() == c.intersect(b.complement()));
  }
  CHECK(OmegaSet(2, 0b11) == OmegaSet::all());
  CHECK(OmegaSet(4, 0b0101) == OmegaSet::residue(0, 2));
  CHECK(OmegaSet(3, 0b001, {}, {0}) == OmegaSet(6, 0b001001, {}, {0}));
  CHECK(OmegaSet::finite({3, 1}) == OmegaSet(1, 0, {1, 3}));
  CHECK(OmegaSet(2, 0b01, {1}) == OmegaSet(2, 0b01).unite(OmegaSet::finite({1})));
  CHECK(error_of([] { (void)OmegaSet(65, 1); }) == ErrorKind::TooLarge);
  CHECK(error_of([] { (void)OmegaSet(0, 1); }) == ErrorKind::Parse);
}

TEST_CASE("omega set constructor keeps its stated membership") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 200; ++round) {
    const std::uint32_t p = 1 + rng() % 8;
    const Mask classes = rng() & full_mask(p);
    std::vector<std::uint64_t> add{rng() % 30, rng() % 30};
    std::vector<std::uint64_t> rem{30 + rng() % 30};
    const OmegaSet s(p, classes, add, rem);
    for (std::uint64_t j = 0; j < 120; ++j) CHECK(s.contains(j) == brute_in(p, classes, add, rem, j));
  }
}

TEST_CASE("ideal membership") {
  const Ideal ev = eventual_omega();
  CHECK(ideal_member(ev, OmegaSet::finite({0, 5, 9})));
  CHECK_FALSE(ideal_member(ev, OmegaSet::residue(1, 2)));
  CHECK(ideal_member(ev, OmegaSet::empty()));
  const Ideal dens = Ideal::make(IdealKind::DensityZero, IndexDcpo::omega());
  CHECK_FALSE(ideal_member(dens, OmegaSet::residue(0, 2)));
  CHECK(ideal_member(dens, OmegaSet::finite({1, 2})));
  const Ideal triv = Ideal::make(IdealKind::TrivialAll, IndexDcpo::omega());
  CHECK(ideal_member(triv, OmegaSet::all()));

  const IndexDcpo c3 = IndexDcpo::finite(chain(3));
  const Ideal fe = Ideal::make(IdealKind::Eventual, c3);
  CHECK(ideal_member(fe, IndexSet(Mask{0b011})));
  CHECK_FALSE(ideal_member(fe, IndexSet(Mask{0b100})));
  CHECK(error_of([&] { (void)ideal_member(fe, IndexSet(OmegaSet::empty())); }) == ErrorKind::IndexMismatch);
  CHECK(error_of([&] { (void)Ideal::make(IdealKind::FiniteSets, c3); }) == ErrorKind::IndexMismatch);
  CHECK(parse_ideal_kind("density0") == IdealKind::DensityZero);
  CHECK(to_string(IdealKind::FiniteSets) == "finite");
}

TEST_CASE("level sets on the example net") {
  const Dcpo e = Dcpo::example_one();
  const Net net = example_net();
  const auto up5 = std::get<OmegaSet>(level_set(e, net, e.up(Elem::nat(5))));
  CHECK(up5 == OmegaSet(2, 0b10, {0, 2, 4, 6, 8}));
  const SetRep a5 = up_of(e, FinSet::make(e, {Elem::a(), Elem::nat(5)}));
  CHECK(std::get<OmegaSet>(level_set(e, net, a5)) == OmegaSet::finite({0, 2, 4, 6, 8}));
  CHECK(std::get<OmegaSet>(level_set(e, Net::constant(Elem::nat(2)), e.up(Elem::nat(1)))).is_empty());
  CHECK(net.stable_bound() == 0);
  CHECK(Net::omega({Track::ascend(), Track::constant(Elem::nat(6))}).stable_bound() == 7);
}

TEST_CASE("level sets match direct evaluation") {
  const Dcpo e = Dcpo::example_one();
  std::vector<Net> nets{example_net(), Net::omega({Track::constant(Elem::nat(3)), Track::ascend()}),
                        Net::omega({Track::ascend(), Track::constant(Elem::top()), Track::constant(Elem::nat(1))})};
  std::vector<SetRep> sets{e.up(Elem::nat(4)), e.up(Elem::a()), e.whole(), e.empty(),
                           SetRep(E1Set({1, 3}, 6, true, false)), SetRep(E1Set({}, 2, false, true))};
  for (const auto& net : nets) {
    for (const auto& s : sets) {
      const auto level = std::get<OmegaSet>(level_set(e, net, s));
      for (std::uint64_t j = 0; j < 150; ++j) CHECK(level.contains(j) == !e.contains(s, value_at(net, j)));
    }
  }
}

TEST_CASE("IS and GIS convergence") {
  const Dcpo d = Dcpo::finite(diamond());
  const auto& p = d.poset();
  const Ideal ev = eventual_omega();
  const Net const_l = Net::constant(d.parse("l"));
  const auto is = converges_IS(d, const_l, d.parse("bot"), ev);
  CHECK(is.holds);
  REQUIRE(is.directed.has_value());
  CHECK(check_is_witness(d, const_l, d.parse("bot"), ev, *is.directed));
  CHECK(converges_IS(d, const_l, d.parse("l"), ev).holds);
  CHECK_FALSE(converges_IS(d, const_l, d.parse("top"), ev).holds);

  const Dcpo e = Dcpo::example_one();
  const Net net = example_net();
  CHECK_FALSE(converges_IS(e, net, Elem::a(), ev).holds);
  const auto gis = converges_GIS(e, net, Elem::a(), ev);
  CHECK(gis.holds);
  REQUIRE(gis.family.has_value());
  CHECK(gis.family->contains(FinSet::make(e, {Elem::a(), Elem::nat(7)})));
  CHECK(check_gis_witness(e, net, Elem::a(), ev, *gis.family));
  CHECK(converges_IS(e, Net::constant(Elem::nat(4)), Elem::nat(4), ev).holds);
  CHECK_FALSE(converges_IS(e, net, Elem::nat(9), ev).holds);
  const Net ascend = Net::omega({Track::ascend()});
  CHECK(converges_IS(e, ascend, Elem::nat(9), ev).holds);
  CHECK(converges_IS(e, ascend, Elem::top(), ev).holds);
  CHECK_FALSE(converges_GIS(e, net, Elem::top(), ev).holds);
  (void)p;
}

TEST_CASE("topological convergence") {
  const FinitePoset p = diamond();
  const Dcpo d = Dcpo::finite(p);
  const Ideal ev = eventual_omega();
  const Topology scott = scott_topology(p);
  const Net const_l = Net::constant(d.parse("l"));
  CHECK(converges_topological(d, const_l, d.parse("bot"), ev, scott).holds);
  const auto bad = converges_topological(d, const_l, d.parse("top"), ev, scott);
  CHECK_FALSE(bad.holds);
  REQUIRE(bad.open_set.has_value());
  CHECK(*bad.open_set == SetRep(names(p, {"top"})));
  for (std::size_t x = 0; x < p.size(); ++x) {
    CHECK(converges_topological(d, Net::constant(Elem::id(x)), Elem::id(x), ev, lawson_topology(p)).holds);
  }

  const Dcpo e = Dcpo::example_one();
  const Net net = example_net();
  const auto law = converges_topological(e, net, Elem::a(), ev, Topology::example_one(TopologyKind::Lawson));
  CHECK_FALSE(law.holds);
  REQUIRE(law.open_set.has_value());
  CHECK(*law.open_set == SetRep(E1Set::singleton(Elem::a())));
  CHECK(converges_topological(e, net, Elem::a(), ev, Topology::example_one(TopologyKind::Scott)).holds);
  CHECK_FALSE(converges_topological(e, net, Elem::top(), ev, Topology::example_one(TopologyKind::Scott)).holds);
  CHECK(converges_topological(e, Net::omega({Track::ascend()}), Elem::top(), ev,
                              Topology::example_one(TopologyKind::Scott)).holds);
  CHECK_FALSE(converges_topological(e, net, Elem::nat(3), ev, Topology::example_one(TopologyKind::Lower)).holds);
}

TEST_CASE("GI family and GI lim-inf") {
  const FinitePoset p = diamond();
  const Dcpo d = Dcpo::finite(p);
  const Ideal ev = eventual_omega();
  const Net alt = Net::omega({Track::constant(d.parse("l")), Track::constant(d.parse("r"))});
  const FinFamily gi = gi_family(d, alt, ev);
  CHECK(gi.sets() == std::vector<FinSet>{FinSet::from_mask(d, names(p, {"bot"})),
                                         FinSet::from_mask(d, names(p, {"l", "r"}))});
  const auto at_bot = is_gi_liminf(d, alt, d.parse("bot"), ev);
  CHECK_FALSE(at_bot.holds);
  REQUIRE(at_bot.failing_member.has_value());
  CHECK(at_bot.failing_member->mask() == names(p, {"l", "r"}));

  const Net const_top = Net::constant(d.parse("top"));
  CHECK(is_gi_liminf(d, const_top, d.parse("top"), ev).holds);
  const auto at_l = is_gi_liminf(d, const_top, d.parse("l"), ev);
  CHECK_FALSE(at_l.holds);
  REQUIRE(at_l.failing_member.has_value());
  CHECK(at_l.failing_member->mask() == names(p, {"r"}));

  const Net const_l = Net::constant(d.parse("l"));
  for (Mask m : antichains(p)) {
    if (m == 0) continue;
    const FinSet f = FinSet::from_mask(d, m);
    CHECK(gi_family(d, const_l, ev).contains(f) == has(p.up_closure(m), p.index_of("l")));
  }

  const Dcpo e = Dcpo::example_one();
  const Net net = example_net();
  const FinFamily egi = gi_family(e, net, ev);
  CHECK(egi.contains(FinSet::make(e, {Elem::a(), Elem::nat(12)})));
  CHECK_FALSE(egi.contains(FinSet::single(e, Elem::nat(0))));
  CHECK_FALSE(egi.contains(FinSet::single(e, Elem::a())));
  CHECK(is_gi_liminf(e, net, Elem::a(), ev).holds);
  CHECK_FALSE(is_gi_liminf(e, net, Elem::top(), ev).holds);
}

TEST_CASE("net class enumeration") {
  const auto nets = enumerate_net_class(chain(2), {});
  std::size_t omega = 0;
  for (const auto& n : nets) omega += n.net.is_omega() ? 1 : 0;
  CHECK(omega == 2 + 4 + 8);
  NetClassConfig none;
  none.include_constant_nets = false;
  CHECK(error_of([&] { (void)enumerate_net_class(chain(2), none); }) == ErrorKind::NetClassTooSmall);
}

TEST_CASE("derived convergence topologies on the diamond") {
  const FinitePoset p = diamond();
  const auto nets = enumerate_net_class(p, {});
  const Topology scott = scott_topology(p);
  const Topology is = derive_convergence_topology(p, ConvergenceMode::IS, nets);
  const Topology gis = derive_convergence_topology(p, ConvergenceMode::GIS, nets);
  const Topology gi = derive_convergence_topology(p, ConvergenceMode::GI, nets);
  CHECK(is.same_opens(scott));
  CHECK(gis.same_opens(scott));
  CHECK(is.opens() == direct_opens(p, ConvergenceMode::IS, nets));
  CHECK(gi.opens() == direct_opens(p, ConvergenceMode::GI, nets));
  // The alternating l, r net has bot as a GI lim-inf point while staying out
  // of {bot} at every index.
  CHECK_FALSE(gi.is_open(SetRep(names(p, {"bot"}))));
  CHECK(gi.coarser_than(lawson_topology(p)));
  CHECK(gi.is_open(SetRep(names(p, {"top"}))));

  std::vector<NetWithIdeal> finite_only;
  for (const auto& n : nets) {
    if (!n.net.is_omega()) finite_only.push_back(n);
  }
  CHECK(derive_convergence_topology(p, ConvergenceMode::GI, finite_only).same_opens(lawson_topology(p)));
  CHECK(derive_convergence_topology(p, ConvergenceMode::GI, finite_only, Exec::Serial).opens() ==
        direct_opens(p, ConvergenceMode::GI, finite_only));
}

TEST_CASE("derived topologies agree with the direct definition on small posets") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const auto& p : generate_all_posets(n)) {
      NetClassConfig cfg;
      cfg.max_index_points = 3;
      cfg.max_omega_period = 2;
      const auto nets = enumerate_net_class(p, cfg);
      for (auto mode : {ConvergenceMode::IS, ConvergenceMode::GIS, ConvergenceMode::GI}) {
        CHECK(derive_convergence_topology(p, mode, nets).opens() == direct_opens(p, mode, nets));
      }
    }
  }
}

TEST_CASE("invalid nets") {
  const Dcpo d = Dcpo::finite(diamond());
  CHECK(error_of([&] { Net::omega({Track::ascend()}).validate(d); }) == ErrorKind::InvalidNet);
  CHECK(error_of([] { (void)IndexDcpo::finite(antichain(2)); }) == ErrorKind::InvalidNet);
  CHECK(error_of([] { (void)Net::omega({}); }) == ErrorKind::InvalidNet);
  CHECK(error_of([] { (void)Net::finite(IndexDcpo::finite(chain(2)), {Elem::id(0)}); }) == ErrorKind::InvalidNet);
  CHECK(error_of([&] { Net::constant(Elem::id(9)).validate(d); }) == ErrorKind::InvalidNet);
}
