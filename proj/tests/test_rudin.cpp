#include <doctest.h>

#include <vector>

#include "domaincheck/corpus.hpp"
#include "domaincheck/error.hpp"
#include "domaincheck/rudin.hpp"
#include "domaincheck/topology.hpp"

using namespace domaincheck;

namespace {

FinSet set_of(const Dcpo& d, std::initializer_list<const char*> names) {
  std::vector<Elem> m;
  for (const char* n : names) m.push_back(d.parse(n));
  return FinSet::make(d, m);
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::Internal;
}

}  // namespace

TEST_CASE("directed families") {
  const Dcpo d = Dcpo::finite(diamond());
  CHECK(is_directed_family(d, FinFamily(std::vector{set_of(d, {"l", "r"}), set_of(d, {"top"})})));
  CHECK_FALSE(is_directed_family(d, FinFamily(std::vector{set_of(d, {"l"}), set_of(d, {"r"})})));
  CHECK(is_directed_family(d, FinFamily(std::vector{set_of(d, {"r"})})));
}

TEST_CASE("extracting a directed set") {
  const Dcpo d = Dcpo::finite(diamond());
  const FinFamily fam{std::vector{set_of(d, {"l", "r"}), set_of(d, {"top"})}};
  const RudinWitness w = extract_directed(d, fam);
  CHECK(w.directed == d.of(std::vector{d.parse("l"), d.parse("top")}));
  CHECK(check_rudin_witness(d, fam, w));
  CHECK(w.meets.size() == 2);

  const FinFamily single{std::vector{set_of(d, {"l", "r"})}};
  CHECK(extract_directed(d, single).directed == d.singleton(d.parse("l")));

  const Dcpo c = Dcpo::finite(chain(3));
  const FinFamily steps{std::vector{set_of(c, {"0"}), set_of(c, {"1"}), set_of(c, {"2"})}};
  const RudinWitness cw = extract_directed(c, steps);
  CHECK(cw.directed == c.whole());
  CHECK(check_rudin_witness(c, steps, cw));

  CHECK(kind_of([&] { (void)extract_directed(d, FinFamily(std::vector{set_of(d, {"l"}), set_of(d, {"r"})})); }) ==
        ErrorKind::NotDirectedFamily);
  const Dcpo e = Dcpo::example_one();
  CHECK(kind_of([&] { (void)extract_directed(e, fin_of(e, Elem::a())); }) == ErrorKind::BackendUnsupported);
}

TEST_CASE("witnesses are rechecked against their family") {
  const Dcpo d = Dcpo::finite(diamond());
  const FinFamily fam{std::vector{set_of(d, {"l", "r"}), set_of(d, {"top"})}};
  RudinWitness w = extract_directed(d, fam);
  RudinWitness not_directed = w;
  not_directed.directed = d.of(std::vector{d.parse("l"), d.parse("r")});
  CHECK_FALSE(check_rudin_witness(d, fam, not_directed));
  RudinWitness missing = w;
  missing.meets.pop_back();
  CHECK_FALSE(check_rudin_witness(d, fam, missing));
}

TEST_CASE("extraction on every directed family of small posets") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& p : generate_all_posets(n)) {
      const Dcpo d = Dcpo::finite(p);
      std::vector<FinSet> sets;
      for (Mask m : antichains(p)) {
        if (m != 0) sets.push_back(FinSet::from_mask(d, m));
      }
      // Every pair of antichains, plus each antichain with its up-closure tops.
      for (std::size_t i = 0; i < sets.size(); ++i) {
        for (std::size_t j = i; j < sets.size(); ++j) {
          const FinFamily fam{std::vector{sets[i], sets[j]}};
          if (!is_directed_family(d, fam)) continue;
          CHECK(check_rudin_witness(d, fam, extract_directed(d, fam)));
        }
      }
    }
  }
}

TEST_CASE("Scott-open corollary") {
  const FinitePoset p = diamond();
  const Dcpo d = Dcpo::finite(p);
  const FinFamily fam{std::vector{set_of(d, {"l", "r"}), set_of(d, {"top"})}};
  CHECK(rudin_corollary_check(d, fam, d.singleton(d.parse("top"))) == set_of(d, {"top"}));
  const FinFamily single{std::vector{set_of(d, {"l", "r"})}};
  CHECK(rudin_corollary_check(d, single, up_of(d, set_of(d, {"l", "r"}))) == set_of(d, {"l", "r"}));
  CHECK(kind_of([&] {
          (void)rudin_corollary_check(d, FinFamily(std::vector{set_of(d, {"bot"})}), d.singleton(d.parse("top")));
        }) == ErrorKind::PreconditionFailed);
  CHECK(kind_of([&] { (void)rudin_corollary_check(d, fam, d.singleton(d.parse("l"))); }) ==
        ErrorKind::PreconditionFailed);

  const Dcpo e = Dcpo::example_one();
  const FinSet got = rudin_corollary_check(e, fin_of(e, Elem::a()), SetRep(E1Set({}, 6, true, true)));
  CHECK(got.contains(Elem::a()));
  CHECK(e.subset_of(up_of(e, got), SetRep(E1Set({}, 6, true, true))));
}
