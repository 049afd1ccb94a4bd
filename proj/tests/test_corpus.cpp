#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "domaincheck/corpus.hpp"
#include "domaincheck/error.hpp"

using namespace domaincheck;

namespace {

using Matrix = std::vector<std::vector<bool>>;

// Every partial order on {0..n-1} as a relation matrix: try all off-diagonal
// relations and keep the antisymmetric, transitive ones.
std::vector<Matrix> labeled_posets(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) cells.emplace_back(i, j);
    }
  }
  std::vector<Matrix> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << cells.size()); ++bits) {
    Matrix m(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = true;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if ((bits >> c) & 1U) m[cells[c].first][cells[c].second] = true;
    }
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      for (std::size_t j = 0; j < n && ok; ++j) {
        if (i != j && m[i][j] && m[j][i]) ok = false;
        for (std::size_t k = 0; k < n && ok; ++k) {
          if (m[i][j] && m[j][k] && !m[i][k]) ok = false;
        }
      }
    }
    if (ok) out.push_back(std::move(m));
  }
  return out;
}

std::vector<bool> canonical(const Matrix& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<bool> best;
  do {
    std::vector<bool> flat;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) flat.push_back(m[perm[i]][perm[j]]);
    }
    if (best.empty() || flat < best) best = flat;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

Matrix matrix_of(const FinitePoset& p) {
  Matrix m(p.size(), std::vector<bool>(p.size()));
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < p.size(); ++j) m[i][j] = p.leq(i, j);
  }
  return m;
}

}  // namespace

TEST_CASE("generated posets match a labeled brute force up to isomorphism") {
  const std::vector<std::size_t> labeled{1, 3, 19, 219, 4231};
  const std::vector<std::size_t> unlabeled{1, 2, 5, 16, 63};
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto all = labeled_posets(n);
    CHECK(all.size() == labeled[n - 1]);
    std::set<std::vector<bool>> classes;
    for (const auto& m : all) classes.insert(canonical(m));
    CHECK(classes.size() == unlabeled[n - 1]);

    const auto generated = generate_all_posets(n);
    std::set<std::vector<bool>> seen;
    for (const auto& p : generated) seen.insert(canonical(matrix_of(p)));
    CHECK(generated.size() == unlabeled[n - 1]);
    CHECK(seen == classes);
  }
}

TEST_CASE("generation bounds") {
  CHECK(generate_all_posets(0).size() == 1);
  CHECK(generate_all_posets(6).size() == 318);
  CHECK_THROWS_AS((void)generate_all_posets(7), Error);
}

TEST_CASE("directed index posets have a top and are pairwise non-isomorphic") {
  const auto idx = directed_index_posets(4);
  // One top added to each poset on 0..3 points.
  CHECK(idx.size() == 1 + 1 + 2 + 5);
  std::set<std::pair<std::size_t, std::uint64_t>> codes;
  for (const auto& j : idx) {
    CHECK(j.greatest(j.all()).has_value());
    codes.insert({j.size(), canonical_code(j)});
  }
  CHECK(codes.size() == idx.size());
}

TEST_CASE("corpus contents") {
  const auto corpus = build_corpus(5);
  std::size_t exhaustive = 0;
  std::set<std::string> names;
  std::set<std::pair<std::size_t, std::uint64_t>> codes;
  for (const auto& e : corpus) {
    CHECK(names.insert(e.poset.name()).second);
    if (e.exhaustive) {
      ++exhaustive;
      CHECK(codes.insert({e.poset.size(), canonical_code(e.poset)}).second);
    }
  }
  CHECK(exhaustive == 87);
  CHECK(names.contains("diamond"));
  CHECK(names.contains("N5"));
  CHECK(names.contains("M3"));
  CHECK(names.contains("cube"));
  CHECK(names.contains("fence_4"));
  CHECK(names.contains("e1trunc_5"));
  CHECK(cube().relation_size() == 27);
  CHECK(pentagon().relation_size() == 13);
}
