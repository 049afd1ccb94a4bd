#include "domaincheck/kernels.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>

#include <omp.h>

#include "domaincheck/dcpo.hpp"
#include "domaincheck/error.hpp"

namespace domaincheck::kernels {

namespace {

constexpr std::size_t kMaxSubsetCarrier = 20;

void require_enumerable(std::size_t n) {
  if (n > kMaxSubsetCarrier) {
    throw Error(ErrorKind::TooLarge, "subset enumeration limited to 20 elements");
  }
}

struct DirectedSup {
  Mask set;
  std::size_t sup;
};

std::vector<DirectedSup> directed_with_sups(const FinitePoset& p) {
  std::vector<DirectedSup> out;
  for_each_directed_subset(p, [&](Mask s) { out.push_back({s, *p.greatest(s)}); });
  return out;
}

bool scott_open_at(const FinitePoset& p, const std::vector<DirectedSup>& dirs, Mask u) {
  if (!p.is_upper(u)) return false;
  return std::all_of(dirs.begin(), dirs.end(),
                     [u](const DirectedSup& d) { return !has(u, d.sup) || (d.set & u) != 0; });
}

bool way_below_at(const std::vector<DirectedSup>& dirs, const FinitePoset& p, std::size_t x,
                  std::size_t y) {
  const Mask up_x = p.up(x);
  for (const auto& d : dirs) {
    if (p.leq(y, d.sup) && (d.set & up_x) == 0) return false;
  }
  return true;
}

std::vector<Mask> collect(std::size_t n, const std::vector<std::uint64_t>& bad_words) {
  std::vector<Mask> out;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t u = 0; u < total; ++u) {
    if (!((bad_words[u >> 6] >> (u & 63)) & 1U)) out.push_back(u);
  }
  return out;
}

// Families for the naive g-lim-inf derivation.
struct GlimInput {
  std::vector<Mask> ups;  // ↑A for every antichain A
  std::size_t n = 0;
};

GlimInput glim_input(const FinitePoset& p) {
  require_enumerable(p.size());
  GlimInput in;
  in.n = p.size();
  for (Mask s = 1; s <= p.all() && s != 0; ++s) {
    if (p.is_antichain(s)) in.ups.push_back(p.up_closure(s));
  }
  return in;
}

// Marks every U that the family `chosen` rules out.
void mark_family(const FinitePoset& p, const GlimInput& in, std::span<const std::size_t> chosen,
                 std::vector<std::uint64_t>& bad) {
  for (std::size_t a : chosen) {
    for (std::size_t b : chosen) {
      const Mask both = in.ups[a] & in.ups[b];
      bool ok = std::any_of(chosen.begin(), chosen.end(),
                            [&](std::size_t h) { return subset(in.ups[h], both); });
      if (!ok) return;  // not Smyth-directed
    }
  }
  Mask meet = p.all();
  for (std::size_t a : chosen) meet &= in.ups[a];
  Mask points = 0;  // x with ∩↑F ⊆ ↑x
  for (std::size_t x = 0; x < in.n; ++x) {
    if (subset(meet, p.up(x))) points |= bit(x);
  }
  const std::uint64_t total = std::uint64_t{1} << in.n;
  for (std::uint64_t u = 0; u < total; ++u) {
    if ((u & points) == 0) continue;
    bool covered = std::any_of(chosen.begin(), chosen.end(),
                               [&](std::size_t a) { return subset(in.ups[a], u); });
    if (!covered) bad[u >> 6] |= std::uint64_t{1} << (u & 63);
  }
}

// Visits every combination of up to `bound` indices whose first index is
// `first`, in lexicographic order.
void combos_from(std::size_t first, std::size_t m, std::size_t bound,
                 const std::function<void(std::span<const std::size_t>)>& fn) {
  std::vector<std::size_t> chosen{first};
  std::function<void(std::size_t)> rec = [&](std::size_t next) {
    fn(chosen);
    if (chosen.size() == bound) return;
    for (std::size_t i = next; i < m; ++i) {
      chosen.push_back(i);
      rec(i + 1);
      chosen.pop_back();
    }
  };
  rec(first + 1);
}

std::size_t word_count(std::size_t n) { return ((std::size_t{1} << n) + 63) / 64; }

}  // namespace

std::vector<Mask> scott_opens_serial(const FinitePoset& p) {
  require_enumerable(p.size());
  const auto dirs = directed_with_sups(p);
  std::vector<Mask> out;
  const std::uint64_t total = std::uint64_t{1} << p.size();
  for (std::uint64_t u = 0; u < total; ++u) {
    if (scott_open_at(p, dirs, u)) out.push_back(u);
  }
  return out;
}

std::vector<Mask> scott_opens_omp(const FinitePoset& p) {
  require_enumerable(p.size());
  const auto dirs = directed_with_sups(p);
  const auto total = static_cast<std::int64_t>(std::uint64_t{1} << p.size());
  std::vector<unsigned char> open(static_cast<std::size_t>(total), 0);
#pragma omp parallel for schedule(static)
  for (std::int64_t u = 0; u < total; ++u) {
    open[static_cast<std::size_t>(u)] = scott_open_at(p, dirs, static_cast<Mask>(u)) ? 1 : 0;
  }
  std::vector<Mask> out;
  for (std::int64_t u = 0; u < total; ++u) {
    if (open[static_cast<std::size_t>(u)]) out.push_back(static_cast<Mask>(u));
  }
  return out;
}

std::vector<Mask> way_below_rows_serial(const FinitePoset& p) {
  const auto dirs = directed_with_sups(p);
  std::vector<Mask> rows(p.size(), 0);
  for (std::size_t x = 0; x < p.size(); ++x) {
    for (std::size_t y = 0; y < p.size(); ++y) {
      if (way_below_at(dirs, p, x, y)) rows[x] |= bit(y);
    }
  }
  return rows;
}

std::vector<Mask> way_below_rows_omp(const FinitePoset& p) {
  const auto dirs = directed_with_sups(p);
  const auto n = static_cast<std::int64_t>(p.size());
  std::vector<Mask> rows(p.size(), 0);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t x = 0; x < n; ++x) {
    Mask row = 0;
    for (std::size_t y = 0; y < p.size(); ++y) {
      if (way_below_at(dirs, p, static_cast<std::size_t>(x), y)) row |= bit(y);
    }
    rows[static_cast<std::size_t>(x)] = row;
  }
  return rows;
}

std::vector<Mask> glim_opens_serial(const FinitePoset& p, std::size_t family_bound) {
  const GlimInput in = glim_input(p);
  std::vector<std::uint64_t> bad(word_count(in.n), 0);
  const std::size_t m = in.ups.size();
  for (std::size_t first = 0; first < m && family_bound > 0; ++first) {
    combos_from(first, m, family_bound,
                [&](std::span<const std::size_t> chosen) { mark_family(p, in, chosen, bad); });
  }
  return collect(in.n, bad);
}

std::vector<Mask> glim_opens_omp(const FinitePoset& p, std::size_t family_bound) {
  const GlimInput in = glim_input(p);
  const std::size_t words = word_count(in.n);
  std::vector<std::uint64_t> bad(words, 0);
  const auto m = static_cast<std::int64_t>(in.ups.size());
  if (family_bound == 0) return collect(in.n, bad);
#pragma omp parallel
  {
    std::vector<std::uint64_t> local(words, 0);
#pragma omp for schedule(dynamic)
    for (std::int64_t first = 0; first < m; ++first) {
      combos_from(static_cast<std::size_t>(first), in.ups.size(), family_bound,
                  [&](std::span<const std::size_t> chosen) { mark_family(p, in, chosen, local); });
    }
#pragma omp critical
    for (std::size_t w = 0; w < words; ++w) bad[w] |= local[w];
  }
  return collect(in.n, bad);
}

std::vector<Mask> constrained_opens_serial(std::size_t carrier_size,
                                           std::span<const LimitConstraint> constraints) {
  require_enumerable(carrier_size);
  std::vector<Mask> out;
  const std::uint64_t total = std::uint64_t{1} << carrier_size;
  for (std::uint64_t u = 0; u < total; ++u) {
    bool ok = true;
    for (const auto& c : constraints) {
      if ((c.limits & u) != 0 && !subset(c.required, u)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(u);
  }
  return out;
}

std::vector<Mask> constrained_opens_omp(std::size_t carrier_size,
                                        std::span<const LimitConstraint> constraints) {
  require_enumerable(carrier_size);
  const auto total = static_cast<std::int64_t>(std::uint64_t{1} << carrier_size);
  std::vector<unsigned char> open(static_cast<std::size_t>(total), 0);
#pragma omp parallel for schedule(static)
  for (std::int64_t u = 0; u < total; ++u) {
    const auto set = static_cast<Mask>(u);
    bool ok = std::all_of(constraints.begin(), constraints.end(), [set](const LimitConstraint& c) {
      return (c.limits & set) == 0 || subset(c.required, set);
    });
    open[static_cast<std::size_t>(u)] = ok ? 1 : 0;
  }
  std::vector<Mask> out;
  for (std::int64_t u = 0; u < total; ++u) {
    if (open[static_cast<std::size_t>(u)]) out.push_back(static_cast<Mask>(u));
  }
  return out;
}

}  // namespace domaincheck::kernels
