#include "domaincheck/corpus.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "domaincheck/error.hpp"

namespace domaincheck {

namespace {

std::uint64_t code_under(const FinitePoset& p, const std::vector<std::size_t>& perm) {
  const std::size_t n = p.size();
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && p.leq(perm[i], perm[j])) code |= std::uint64_t{1} << (i * n + j);
    }
  }
  return code;
}

FinitePoset poset_from_code(std::string name, std::size_t n, std::uint64_t code) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if ((code >> (i * n + j)) & 1U) pairs.emplace_back(i, j);
    }
  }
  return FinitePoset::from_index_pairs(std::move(name), std::move(names), pairs);
}

}  // namespace

std::uint64_t canonical_code(const FinitePoset& p) {
  std::vector<std::size_t> perm(p.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    best = std::min(best, code_under(p, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<FinitePoset> generate_all_posets(std::size_t n) {
  if (n > 6) throw Error(ErrorKind::TooLarge, "poset generation is limited to 6 points");
  if (n == 0) return {FinitePoset::from_index_pairs("all0_0", {}, {})};

  // Every poset has a linear extension, so it suffices to enumerate strict
  // relations contained in {(i, j) : i < j} that are transitive.
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  }
  std::vector<std::uint64_t> codes;
  const std::uint64_t total = std::uint64_t{1} << slots.size();
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) names[i] = "e" + std::to_string(i);
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    std::vector<Mask> up(n, 0);
    for (std::size_t s = 0; s < slots.size(); ++s) {
      if ((bits >> s) & 1U) up[slots[s].first] |= bit(slots[s].second);
    }
    bool transitive = true;
    for (std::size_t i = 0; i < n && transitive; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (has(up[i], j) && !subset(up[j], up[i])) {
          transitive = false;
          break;
        }
      }
    }
    if (!transitive) continue;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t s = 0; s < slots.size(); ++s) {
      if ((bits >> s) & 1U) pairs.push_back(slots[s]);
    }
    codes.push_back(canonical_code(FinitePoset::from_index_pairs("tmp", names, pairs)));
  }
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());

  std::vector<FinitePoset> out;
  out.reserve(codes.size());
  for (std::size_t k = 0; k < codes.size(); ++k) {
    out.push_back(poset_from_code("all" + std::to_string(n) + "_" + std::to_string(k), n, codes[k]));
  }
  return out;
}

std::vector<FinitePoset> directed_index_posets(std::size_t max_points) {
  std::vector<FinitePoset> out;
  for (std::size_t k = 0; k + 1 <= max_points; ++k) {
    for (const auto& base : generate_all_posets(k)) {
      auto names = base.element_names();
      names.push_back("t");
      auto pairs = base.relation();
      for (std::size_t i = 0; i < k; ++i) pairs.emplace_back(i, k);
      out.push_back(FinitePoset::from_index_pairs("idx" + std::to_string(k + 1) + "_" +
                                                      std::to_string(out.size()),
                                                  std::move(names), pairs));
    }
  }
  return out;
}

FinitePoset chain(std::size_t n) {
  std::vector<std::string> names;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(std::to_string(i));
    if (i > 0) pairs.emplace_back(i - 1, i);
  }
  return FinitePoset::from_index_pairs("chain_" + std::to_string(n), std::move(names), pairs);
}

FinitePoset antichain(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
  return FinitePoset::from_index_pairs("antichain_" + std::to_string(n), std::move(names), {});
}

FinitePoset diamond() {
  std::vector<LePair> pairs{{"bot", "l"}, {"bot", "r"}, {"l", "top"}, {"r", "top"}};
  return FinitePoset::build("diamond", {"bot", "l", "r", "top"}, pairs);
}

FinitePoset pentagon() {
  std::vector<LePair> pairs{{"bot", "a"}, {"a", "b"}, {"b", "top"}, {"bot", "c"}, {"c", "top"}};
  return FinitePoset::build("N5", {"bot", "a", "b", "c", "top"}, pairs);
}

FinitePoset m3() {
  std::vector<LePair> pairs{{"bot", "a"}, {"bot", "b"}, {"bot", "c"},
                            {"a", "top"}, {"b", "top"}, {"c", "top"}};
  return FinitePoset::build("M3", {"bot", "a", "b", "c", "top"}, pairs);
}

FinitePoset cube() {
  const std::vector<std::string> names{"{}", "x", "y", "z", "xy", "xz", "yz", "xyz"};
  const std::vector<unsigned> sets{0, 1, 2, 4, 3, 5, 6, 7};
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = 0; j < sets.size(); ++j) {
      if (i != j && (sets[i] & ~sets[j]) == 0) pairs.emplace_back(i, j);
    }
  }
  return FinitePoset::from_index_pairs("cube", names, pairs);
}

FinitePoset fence4() {
  std::vector<LePair> pairs{{"f0", "f1"}, {"f2", "f1"}, {"f2", "f3"}};
  return FinitePoset::build("fence_4", {"f0", "f1", "f2", "f3"}, pairs);
}

std::vector<CorpusEntry> build_corpus(std::size_t max_size) {
  std::vector<CorpusEntry> out;
  for (std::size_t n = 1; n <= 6; ++n) out.push_back({chain(n), false});
  for (std::size_t n = 2; n <= 5; ++n) out.push_back({antichain(n), false});
  out.push_back({diamond(), false});
  out.push_back({pentagon(), false});
  out.push_back({m3(), false});
  out.push_back({cube(), false});
  out.push_back({fence4(), false});
  for (std::size_t n : {0U, 2U, 5U}) out.push_back({truncate_example_one(n), false});
  for (std::size_t n = 1; n <= max_size; ++n) {
    for (auto& p : generate_all_posets(n)) out.push_back({std::move(p), true});
  }
  return out;
}

}  // namespace domaincheck
