#include <doctest.h>

#include <random>
#include <vector>

#include "domaincheck/corpus.hpp"
#include "domaincheck/kernels.hpp"

using namespace domaincheck;

TEST_CASE("serial and OpenMP kernels agree on the corpus") {
  for (const auto& entry : build_corpus(4)) {
    const FinitePoset& p = entry.poset;
    INFO(p.name());
    CHECK(kernels::scott_opens_serial(p) == kernels::scott_opens_omp(p));
    CHECK(kernels::way_below_rows_serial(p) == kernels::way_below_rows_omp(p));
    if (p.size() <= 5) CHECK(kernels::glim_opens_serial(p, 3) == kernels::glim_opens_omp(p, 3));
  }
}

TEST_CASE("way-below rows collapse to the order on finite posets") {
  for (const auto& entry : build_corpus(4)) {
    const FinitePoset& p = entry.poset;
    const auto rows = kernels::way_below_rows_serial(p);
    for (std::size_t x = 0; x < p.size(); ++x) CHECK(rows[x] == p.up_closure(bit(x)));
  }
}

TEST_CASE("constraint kernel") {
  std::mt19937_64 rng(3);
  for (int round = 0; round < 40; ++round) {
    const std::size_t n = 1 + rng() % 6;
    std::vector<kernels::LimitConstraint> cs;
    for (int k = 0; k < 6; ++k) cs.push_back({rng() & full_mask(n), rng() & full_mask(n)});
    const auto serial = kernels::constrained_opens_serial(n, cs);
    CHECK(serial == kernels::constrained_opens_omp(n, cs));
    std::vector<Mask> expected;
    for (Mask u = 0; u <= full_mask(n); ++u) {
      bool ok = true;
      for (const auto& c : cs) ok = ok && ((c.limits & u) == 0 || subset(c.required, u));
      if (ok) expected.push_back(u);
    }
    CHECK(serial == expected);
  }
  CHECK(kernels::constrained_opens_serial(2, {}) == std::vector<Mask>{0, 1, 2, 3});
}
