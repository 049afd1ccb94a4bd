#pragma once

#include <string>
#include <vector>

#include "domaincheck/poset.hpp"

namespace domaincheck {

/// All posets on n unlabeled points up to isomorphism, n ≤ 6 (counts 1, 1,
/// 2, 5, 16, 63, 318 for n = 0..6). Elements are named e0..e{n-1} in a
/// natural labeling; posets are named "all{n}_{k}". Throws Error{TooLarge}.
std::vector<FinitePoset> generate_all_posets(std::size_t n);

/// Canonical code of a poset: the least relation bit pattern over all
/// relabelings. Isomorphic posets share it.
std::uint64_t canonical_code(const FinitePoset& p);

/// Finite directed index posets (those with a greatest element) with at most
/// `max_points` points, up to isomorphism.
std::vector<FinitePoset> directed_index_posets(std::size_t max_points);

FinitePoset chain(std::size_t n);
FinitePoset antichain(std::size_t n);
FinitePoset diamond();
FinitePoset pentagon();
FinitePoset m3();
FinitePoset cube();
FinitePoset fence4();

struct CorpusEntry {
  FinitePoset poset;
  bool exhaustive = false;
};

/// Named posets followed by every poset with 1..max_size points.
std::vector<CorpusEntry> build_corpus(std::size_t max_size = 5);

}  // namespace domaincheck
