#include <doctest.h>

#include <optional>
#include <vector>

#include "domaincheck/corpus.hpp"
#include "domaincheck/error.hpp"
#include "domaincheck/example_one.hpp"
#include "domaincheck/waybelow.hpp"

using namespace domaincheck;

namespace {

// G ≪ H straight from the definition: quantify over every subset D that is
// directed pairwise, with its supremum found as the least upper bound.
bool brute_set_way_below(const FinitePoset& p, Mask g, Mask h) {
  const std::size_t n = p.size();
  auto above = [&](Mask s, std::size_t y) {
    for (std::size_t x = 0; x < n; ++x) {
      if (has(s, x) && p.leq(x, y)) return true;
    }
    return false;
  };
  for (Mask dset = 1; dset <= p.all(); ++dset) {
    bool directed = true;
    for (std::size_t x = 0; x < n && directed; ++x) {
      for (std::size_t y = 0; y < n && directed; ++y) {
        if (!has(dset, x) || !has(dset, y)) continue;
        bool bound = false;
        for (std::size_t z = 0; z < n; ++z) bound = bound || (has(dset, z) && p.leq(x, z) && p.leq(y, z));
        directed = bound;
      }
    }
    if (!directed) continue;
    std::optional<std::size_t> sup;
    for (std::size_t u = 0; u < n; ++u) {
      bool upper = true;
      for (std::size_t x = 0; x < n; ++x) upper = upper && (!has(dset, x) || p.leq(x, u));
      if (upper && (!sup || p.leq(u, *sup))) sup = u;
    }
    if (!above(h, *sup)) continue;
    bool meets = false;
    for (std::size_t x = 0; x < n; ++x) meets = meets || (has(dset, x) && above(g, x));
    if (!meets) return false;
  }
  return true;
}

// Directed subsets of the example dcpo up to the part that matters for ≪:
// a finite chain is represented by its maximum, every infinite set of
// naturals (with or without top) by a tail, and {a}, {top} by themselves.
// Any directed set containing top is {top}-like; {a, top} ∪ S has top.
struct Shape {
  std::optional<std::uint64_t> max_nat;
  std::optional<std::uint64_t> tail;
  bool a = false;
  bool top = false;
};

Elem shape_sup(const Shape& s) {
  if (s.top || s.tail) return Elem::top();
  if (s.a) return Elem::a();
  return Elem::nat(*s.max_nat);
}

bool shape_meets_up(const Shape& s, const FinSet& g) {
  for (Elem x : g.members()) {
    if (s.top) return true;  // top is above everything
    if (s.a && example_one::leq(x, Elem::a())) return true;
    if (s.max_nat && example_one::leq(x, Elem::nat(*s.max_nat))) return true;
    if (s.tail && x.is_nat()) return true;  // a tail reaches past any natural
  }
  return false;
}

bool oracle_e1_way_below(const FinSet& g, const FinSet& h, std::uint64_t bound) {
  std::vector<Shape> shapes{{std::nullopt, std::nullopt, true, false}, {std::nullopt, std::nullopt, false, true}};
  for (std::uint64_t m = 0; m <= bound; ++m) {
    shapes.push_back({m, std::nullopt, false, false});
    shapes.push_back({std::nullopt, m, false, false});
  }
  for (const auto& s : shapes) {
    const Elem sup = shape_sup(s);
    bool in_up_h = false;
    for (Elem y : h.members()) in_up_h = in_up_h || example_one::leq(y, sup);
    if (in_up_h && !shape_meets_up(s, g)) return false;
  }
  return true;
}

std::vector<FinSet> forms(const Dcpo& d, std::uint64_t bound) {
  std::vector<FinSet> out{FinSet::single(d, Elem::a()), FinSet::single(d, Elem::top())};
  for (std::uint64_t n = 0; n <= bound; ++n) {
    out.push_back(FinSet::single(d, Elem::nat(n)));
    out.push_back(FinSet::make(d, {Elem::a(), Elem::nat(n)}));
  }
  return out;
}

FinSet named(const Dcpo& d, std::initializer_list<const char*> names) {
  std::vector<Elem> members;
  for (const char* n : names) members.push_back(d.parse(n));
  return FinSet::make(d, members);
}

}  // namespace

TEST_CASE("finite sets normalize to their minimal elements") {
  const Dcpo d = Dcpo::finite(diamond());
  CHECK(named(d, {"l", "top", "r"}) == named(d, {"r", "l"}));
  CHECK(named(d, {"bot", "top"}).size() == 1);
  CHECK_THROWS_AS((void)FinSet::make(d, {}), Error);
}

TEST_CASE("set way-below on finite posets agrees with the definition and with the Smyth order") {
  std::vector<FinitePoset> posets{diamond(), pentagon(), m3(), fence4(), truncate_example_one(2)};
  for (std::size_t n = 1; n <= 4; ++n) {
    for (auto& p : generate_all_posets(n)) posets.push_back(std::move(p));
  }
  for (const auto& p : posets) {
    const Dcpo d = Dcpo::finite(p);
    std::vector<FinSet> sets;
    for (Mask m : antichains(p)) {
      if (m != 0) sets.push_back(FinSet::from_mask(d, m));
    }
    for (const auto& g : sets) {
      for (const auto& h : sets) {
        const bool wb = set_way_below(d, g, h);
        CHECK(wb == brute_set_way_below(p, g.mask(), h.mask()));
        CHECK(wb == smyth_leq(d, g, h));
      }
    }
    for (std::size_t x = 0; x < p.size(); ++x) {
      for (std::size_t y = 0; y < p.size(); ++y) {
        CHECK(point_way_below(d, Elem::id(x), Elem::id(y)) == p.leq(x, y));
      }
    }
  }
}

TEST_CASE("Smyth order examples") {
  const Dcpo d = Dcpo::finite(diamond());
  CHECK(smyth_leq(d, named(d, {"l", "r"}), named(d, {"l", "r"})));
  CHECK(smyth_leq(d, named(d, {"bot"}), named(d, {"l", "r"})));
  CHECK_FALSE(smyth_leq(d, named(d, {"l"}), named(d, {"r"})));
}

TEST_CASE("example one way-below matches the directed-shape model") {
  const Dcpo d = Dcpo::example_one();
  const auto all = forms(d, 5);
  for (const auto& g : all) {
    for (const auto& h : all) {
      INFO("g = " << d.format(up_of(d, g)) << ", h = " << d.format(up_of(d, h)));
      CHECK(set_way_below(d, g, h) == oracle_e1_way_below(g, h, 8));
    }
  }
  CHECK(set_way_below(d, named(d, {"a", "2"}), named(d, {"a"})));
  CHECK_FALSE(set_way_below(d, named(d, {"a"}), named(d, {"a"})));
  CHECK_FALSE(point_way_below(d, Elem::a(), Elem::a()));
  CHECK(point_way_below(d, Elem::nat(3), Elem::top()));
  CHECK_FALSE(point_way_below(d, Elem::nat(3), Elem::a()));
  for (std::uint64_t n = 0; n <= 100; ++n) {
    CHECK(set_way_below(d, FinSet::make(d, {Elem::a(), Elem::nat(n)}), FinSet::single(d, Elem::a())));
  }
}

TEST_CASE("waydown sets") {
  const Dcpo e = Dcpo::example_one();
  CHECK(e.is_empty(waydown(e, Elem::a())));
  CHECK(waydown(e, Elem::top()).symbolic() == E1Set::nats_from(0));
  CHECK(waydown(e, Elem::nat(2)).symbolic() == E1Set({0, 1, 2}, std::nullopt, false, false));
  const Dcpo d = Dcpo::finite(diamond());
  for (std::size_t x = 0; x < 4; ++x) CHECK(waydown(d, Elem::id(x)) == d.down(Elem::id(x)));
}

TEST_CASE("fin(x)") {
  const Dcpo one = Dcpo::finite(chain(1));
  const FinFamily f1 = fin_of(one, Elem::id(0));
  REQUIRE(f1.sets().size() == 1);
  CHECK(f1.sets()[0] == FinSet::single(one, Elem::id(0)));

  const Dcpo d = Dcpo::finite(diamond());
  const FinFamily ftop = fin_of(d, d.parse("top"));
  for (auto s : {named(d, {"l"}), named(d, {"r"}), named(d, {"top"}), named(d, {"bot"}), named(d, {"l", "r"})}) {
    CHECK(ftop.contains(s));
  }
  CHECK(ftop.sets().size() == 5);

  const Dcpo e = Dcpo::example_one();
  const FinFamily fa = fin_of(e, Elem::a());
  for (std::uint64_t n = 0; n <= 50; ++n) CHECK(fa.contains(FinSet::make(e, {Elem::a(), Elem::nat(n)})));
  CHECK_FALSE(fa.contains(FinSet::single(e, Elem::a())));
  for (Elem x : {Elem::a(), Elem::top(), Elem::nat(0), Elem::nat(4)}) {
    const FinFamily f = fin_of(e, x);
    CHECK(is_smyth_directed(e, f));
    CHECK(SetRep(f.schema().intersection_of_upsets()) == e.up(x));
    for (const auto& s : f.schema().sample(6)) CHECK(set_way_below(e, s, FinSet::single(e, x)));
  }
}

TEST_CASE("classification") {
  for (const auto& p : {chain(3), diamond(), pentagon(), m3(), fence4(), truncate_example_one(2)}) {
    const auto r = classify(Dcpo::finite(p));
    CHECK(r.is_dcpo);
    CHECK(r.is_continuous);
    CHECK(r.is_quasi_continuous);
    CHECK(r.is_meet_continuous);
  }
  const Dcpo e = Dcpo::example_one();
  const auto r = classify(e);
  CHECK(r.is_dcpo);
  CHECK(r.is_quasi_continuous);
  CHECK_FALSE(r.is_continuous);
  CHECK_FALSE(r.is_meet_continuous);
  REQUIRE(r.meet_continuous_witness.has_value());
  CHECK(r.meet_continuous_witness->element == Elem::a());
  REQUIRE(r.meet_continuous_witness->open_set.has_value());
  CHECK(*r.meet_continuous_witness->open_set == e.whole());
  REQUIRE(r.continuous_witness.has_value());
  CHECK(r.continuous_witness->element == Elem::a());
}

TEST_CASE("interpolation") {
  const Dcpo d = Dcpo::finite(diamond());
  const FinSet h = named(d, {"l", "r"});
  const Elem top = d.parse("top");
  const FinSet f = interpolate(d, h, top);
  CHECK(set_way_below(d, h, f));
  CHECK(set_way_below(d, f, FinSet::single(d, top)));
  CHECK_THROWS_AS((void)interpolate(d, named(d, {"l"}), d.parse("r")), Error);

  const Dcpo e = Dcpo::example_one();
  const FinSet ha = named(e, {"a", "2"});
  const FinSet fa = interpolate(e, ha, Elem::a());
  CHECK(set_way_below(e, ha, fa));
  CHECK(set_way_below(e, fa, FinSet::single(e, Elem::a())));
  const FinSet ht = named(e, {"3"});
  const FinSet ft = interpolate(e, ht, Elem::top());
  CHECK(set_way_below(e, ht, ft));
  CHECK(set_way_below(e, ft, FinSet::single(e, Elem::top())));
  try {
    (void)interpolate(e, named(e, {"a"}), Elem::a());
    FAIL("expected a precondition failure");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::PreconditionFailed);
  }
}

TEST_CASE("way-up sets") {
  const Dcpo d = Dcpo::finite(pentagon());
  for (Mask m : antichains(d.poset())) {
    if (m == 0) continue;
    const FinSet f = FinSet::from_mask(d, m);
    CHECK(way_up(d, f) == up_of(d, f));
  }
  const Dcpo e = Dcpo::example_one();
  CHECK(way_up(e, named(e, {"a", "2"})).symbolic() == E1Set({}, 2, true, true));
  CHECK(e.is_empty(way_up(e, named(e, {"a"}))));
  CHECK(e.is_empty(way_up(e, named(e, {"top"}))));
  CHECK(way_up(e, named(e, {"4"})).symbolic() == E1Set({}, 4, false, true));
}

TEST_CASE("family directedness") {
  const Dcpo d = Dcpo::finite(diamond());
  CHECK(is_smyth_directed(d, FinFamily(std::vector<FinSet>{named(d, {"l", "r"}), named(d, {"top"})})));
  CHECK_FALSE(is_smyth_directed(d, FinFamily(std::vector<FinSet>{named(d, {"l"}), named(d, {"r"})})));
  CHECK_FALSE(is_smyth_directed(d, FinFamily(std::vector<FinSet>{})));
  const Dcpo e = Dcpo::example_one();
  const E1Family pairs{{{E1FamilyPart::Kind::APairRange, 0, std::nullopt, std::nullopt}}};
  CHECK(pairs.is_smyth_directed());
  CHECK(pairs.intersection_of_upsets() == e.up(Elem::a()).symbolic());
  const E1Family mixed{{{E1FamilyPart::Kind::Literal, 0, std::nullopt, FinSet::single(e, Elem::a())},
                        {E1FamilyPart::Kind::Literal, 0, std::nullopt, FinSet::single(e, Elem::nat(1))}}};
  CHECK_FALSE(mixed.is_smyth_directed());
}
