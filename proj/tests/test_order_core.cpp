#include <doctest.h>

#include <vector>

#include "domaincheck/corpus.hpp"
#include "domaincheck/dcpo.hpp"
#include "domaincheck/error.hpp"
#include "domaincheck/example_one.hpp"

using namespace domaincheck;

namespace {

// Directedness from the definition: nonempty, and every pair has an upper
// bound inside the set.
bool pairwise_directed(const FinitePoset& p, Mask s) {
  if (s == 0) return false;
  for (std::size_t x = 0; x < p.size(); ++x) {
    for (std::size_t y = 0; y < p.size(); ++y) {
      if (!has(s, x) || !has(s, y)) continue;
      bool bound = false;
      for (std::size_t z = 0; z < p.size(); ++z) bound = bound || (has(s, z) && p.leq(x, z) && p.leq(y, z));
      if (!bound) return false;
    }
  }
  return true;
}

Mask mask_of(const FinitePoset& p, std::initializer_list<const char*> names) {
  Mask m = 0;
  for (const char* n : names) m |= bit(p.index_of(n));
  return m;
}

}  // namespace

TEST_CASE("closure of generator pairs") {
  const auto one = FinitePoset::build("one", {"x"}, std::vector<LePair>{});
  CHECK(one.relation_size() == 1);
  CHECK(one.leq(0, 0));

  const auto d = diamond();
  CHECK(d.size() == 4);
  CHECK(d.relation_size() == 9);
  CHECK(d.leq(d.index_of("bot"), d.index_of("top")));
  CHECK_FALSE(d.leq(d.index_of("l"), d.index_of("r")));
}

TEST_CASE("construction errors carry their kind") {
  std::vector<LePair> cycle{{"x", "y"}, {"y", "x"}};
  try {
    (void)FinitePoset::build("bad", {"x", "y"}, cycle);
    FAIL("expected a cycle");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Cycle);
  }
  try {
    (void)FinitePoset::build("dup", {"x", "x"}, std::vector<LePair>{});
    FAIL("expected a duplicate");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DuplicateElement);
  }
  std::vector<LePair> unknown{{"x", "z"}};
  CHECK_THROWS_AS((void)FinitePoset::build("u", {"x"}, unknown), Error);
}

TEST_CASE("example one order") {
  CHECK(example_one::leq(Elem::nat(3), Elem::nat(5)));
  CHECK_FALSE(example_one::leq(Elem::nat(5), Elem::nat(3)));
  CHECK_FALSE(example_one::leq(Elem::a(), Elem::nat(5)));
  CHECK_FALSE(example_one::leq(Elem::nat(5), Elem::a()));
  CHECK(example_one::leq(Elem::a(), Elem::top()));
  CHECK(example_one::leq(Elem::nat(7), Elem::top()));
  CHECK_FALSE(example_one::leq(Elem::top(), Elem::a()));
  CHECK(example_one::parse("inf") == Elem::top());
  CHECK(example_one::format(Elem::nat(12)) == "12");
}

TEST_CASE("up and down closures") {
  const Dcpo d = Dcpo::finite(diamond());
  const auto& p = d.poset();
  CHECK(d.up(Elem::id(p.index_of("l"))).bits() == mask_of(p, {"l", "top"}));
  CHECK(d.down(Elem::id(p.index_of("l"))).bits() == mask_of(p, {"l", "bot"}));
  CHECK(d.up_closure(d.whole()) == d.whole());

  const Dcpo e = Dcpo::example_one();
  const E1Set a2 = E1Set::of(std::vector<Elem>{Elem::a(), Elem::nat(2)});
  const SetRep up = e.up_closure(SetRep(a2));
  CHECK(up.symbolic() == E1Set({}, 2, true, true));
  CHECK(e.up_closure(e.whole()) == e.whole());
  CHECK(e.down(Elem::nat(2)).symbolic() == E1Set({0, 1, 2}, std::nullopt, false, false));
}

TEST_CASE("directedness matches the pairwise definition on every small poset") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& p : generate_all_posets(n)) {
      const Dcpo d = Dcpo::finite(p);
      std::size_t directed = 0;
      for (Mask s = 1; s <= p.all(); ++s) {
        const bool expect = pairwise_directed(p, s);
        CHECK(d.is_directed(SetRep(s)) == expect);
        directed += expect ? 1 : 0;
      }
      CHECK(enumerate_directed_subsets(p).size() == directed);
    }
  }
}

TEST_CASE("directed subsets of small posets") {
  CHECK(enumerate_directed_subsets(chain(1)).size() == 1);
  const auto two = antichain(2);
  const auto subsets = enumerate_directed_subsets(two);
  CHECK(subsets.size() == 2);
  // Diamond: 1 + 2 + 2 + 8 sets with greatest element bot, l, r, top.
  CHECK(enumerate_directed_subsets(diamond()).size() == 13);
  CHECK(enumerate_directed_subsets(chain(5)).size() == 31);
  CHECK_THROWS_AS((void)enumerate_directed_subsets(Dcpo::example_one()), Error);
}

TEST_CASE("directed suprema") {
  const Dcpo d = Dcpo::finite(diamond());
  const auto& p = d.poset();
  CHECK_FALSE(d.is_directed(SetRep(mask_of(p, {"l", "r"}))));
  CHECK(d.is_directed(SetRep(mask_of(p, {"bot", "l", "top"}))));
  CHECK(d.directed_sup(SetRep(mask_of(p, {"bot", "l"}))) == Elem::id(p.index_of("l")));
  CHECK_THROWS_AS((void)d.directed_sup(SetRep(mask_of(p, {"l", "r"}))), Error);

  const Dcpo e = Dcpo::example_one();
  CHECK(e.is_directed(SetRep(E1Set::nats_from(0))));
  CHECK(e.directed_sup(SetRep(E1Set::nats_from(0))) == Elem::top());
  CHECK(e.directed_sup(SetRep(E1Set::singleton(Elem::a()))) == Elem::a());
  CHECK(e.directed_sup(SetRep(E1Set({1, 4}, std::nullopt, false, false))) == Elem::nat(4));
  CHECK_FALSE(e.is_directed(SetRep(E1Set({1}, std::nullopt, true, false))));
  CHECK_FALSE(e.is_directed(SetRep(E1Set::empty())));
}

TEST_CASE("example one set algebra") {
  const std::vector<E1Set> shapes{
      E1Set::empty(), E1Set::all(), E1Set({0, 3}, std::nullopt, true, false), E1Set({1}, 5, false, true),
      E1Set::nats_from(2), E1Set({0, 1, 2}, 3, false, false), E1Set::singleton(Elem::top())};
  for (const auto& s : shapes) {
    CHECK(s.complement().complement() == s);
    for (const auto& t : shapes) {
      CHECK(s.unite(t).complement() == s.complement().intersect(t.complement()));
      CHECK(s.intersect(t).complement() == s.complement().unite(t.complement()));
      for (std::uint64_t k = 0; k < 10; ++k) {
        CHECK(s.unite(t).contains_nat(k) == (s.contains_nat(k) || t.contains_nat(k)));
        CHECK(s.intersect(t).contains_nat(k) == (s.contains_nat(k) && t.contains_nat(k)));
      }
    }
  }
  // {0, 1, 2} with a tail from 3 is the whole of N.
  CHECK(E1Set({0, 1, 2}, 3, false, false) == E1Set::nats_from(0));
}

TEST_CASE("truncations agree with the example one order") {
  for (std::size_t n = 0; n <= 20; ++n) {
    const auto t = truncate_example_one(n);
    CHECK(t.size() == n + 3);
    auto as_elem = [&](std::size_t i) {
      const auto& name = t.element_name(i);
      return example_one::parse(name);
    };
    for (std::size_t i = 0; i < t.size(); ++i) {
      for (std::size_t j = 0; j < t.size(); ++j) CHECK(t.leq(i, j) == example_one::leq(as_elem(i), as_elem(j)));
    }
  }
  const auto t0 = truncate_example_one(0);
  CHECK_FALSE(t0.leq(t0.index_of("a"), t0.index_of("0")));
  CHECK_FALSE(t0.leq(t0.index_of("0"), t0.index_of("a")));
}
