#include "domaincheck/harness.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <sstream>

#include "domaincheck/convergence.hpp"
#include "domaincheck/corpus.hpp"
#include "domaincheck/error.hpp"
#include "domaincheck/example_one.hpp"
#include "domaincheck/json_io.hpp"
#include "domaincheck/rudin.hpp"
#include "domaincheck/topology.hpp"
#include "domaincheck/waybelow.hpp"

namespace domaincheck {

using nlohmann::json;

namespace {

constexpr std::size_t kShownPerCheck = 3;

// Counts cases for one poset and keeps the first few witnesses per check.
class Tally {
 public:
  Tally() = default;
  Tally(std::string suite, std::string poset) : suite_(std::move(suite)), poset_(std::move(poset)) {}

  template <typename Witness>
  void check(std::string_view name, bool ok, Witness&& witness) {
    const auto id = cases_++;
    if (ok) {
      ++passed_;
      return;
    }
    auto& shown = shown_[std::string(name)];
    if (shown++ < kShownPerCheck) {
      json w = witness();
      w["poset"] = poset_;
      failures_.push_back({suite_, poset_ + "#" + std::to_string(id), std::string(name), std::move(w)});
    }
  }
  void check(std::string_view name, bool ok) {
    check(name, ok, [] { return json::object(); });
  }

  void merge_into(SuiteReport& r) {
    r.cases += cases_;
    r.passed += passed_;
    for (auto& f : failures_) r.failures.push_back(std::move(f));
  }

 private:
  std::string suite_;
  std::string poset_;
  std::uint64_t cases_ = 0;
  std::uint64_t passed_ = 0;
  std::vector<Failure> failures_;
  std::map<std::string, std::size_t> shown_;
};

class Coverage {
 public:
  void hit(std::initializer_list<std::string_view> ops) {
    std::lock_guard lock(mu_);
    for (auto op : ops) seen_.emplace(op);
  }
  std::vector<std::string> missing() const {
    std::vector<std::string> out;
    for (const auto& op : checked_operations()) {
      if (!seen_.contains(op)) out.push_back(op);
    }
    return out;
  }

 private:
  mutable std::mutex mu_;
  std::set<std::string, std::less<>> seen_;
};

struct Context {
  SuiteParams params;
  std::vector<CorpusEntry> corpus;
  std::vector<IndexDcpo> sample_indices;
  Coverage coverage;

  std::mutex cache_mu;
  std::map<std::string, Topology> cache;

  // Memoized per poset: derived topologies are shared by several suites.
  Topology cached(const std::string& key, const std::function<Topology()>& make) {
    {
      std::lock_guard lock(cache_mu);
      if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    Topology t = make();
    std::lock_guard lock(cache_mu);
    return cache.emplace(key, std::move(t)).first->second;
  }

  Topology derived(const FinitePoset& p, ConvergenceMode mode) {
    return cached(p.name() + "/" + to_string(mode), [&] {
      return derive_convergence_topology(p, mode, NetClassConfig{}, Exec::Serial);
    });
  }
};

using PosetFn = std::function<void(const FinitePoset&, std::size_t, Tally&)>;

// Fans out over corpus entries accepted by `filter` and merges the tallies in
// corpus order, so reports do not depend on thread scheduling.
void per_poset(Context& ctx, SuiteReport& report, const std::function<bool(const FinitePoset&)>& filter,
               const PosetFn& fn) {
  std::vector<std::size_t> picked;
  for (std::size_t i = 0; i < ctx.corpus.size(); ++i) {
    if (filter(ctx.corpus[i].poset)) picked.push_back(i);
  }
  std::vector<Tally> tallies(picked.size());
  parallel_for(ctx.params.exec, picked.size(), [&](std::size_t k) {
    const FinitePoset& p = ctx.corpus[picked[k]].poset;
    Tally t(report.suite, p.name());
    try {
      fn(p, picked[k], t);
    } catch (const std::exception& e) {
      const std::string msg = e.what();
      t.check("no_exception", false, [&] { return json{{"error", msg}}; });
    }
    tallies[k] = std::move(t);
  });
  for (auto& t : tallies) t.merge_into(report);
}

void per_poset(Context& ctx, SuiteReport& report, const PosetFn& fn) {
  per_poset(ctx, report, [](const FinitePoset&) { return true; }, fn);
}

void on_example_one(SuiteReport& report, const std::function<void(const Dcpo&, Tally&)>& fn) {
  Tally t(report.suite, "exampleone");
  const Dcpo d = Dcpo::example_one();
  try {
    fn(d, t);
  } catch (const std::exception& e) {
    const std::string msg = e.what();
    t.check("no_exception", false, [&] { return json{{"error", msg}}; });
  }
  t.merge_into(report);
}

std::vector<FinSet> antichain_sets(const Dcpo& d) {
  std::vector<FinSet> out;
  for (Mask m : antichains(d.poset())) {
    if (m != 0) out.push_back(FinSet::from_mask(d, m));
  }
  return out;
}

// Antichain forms {n}, {a, n}, {a}, {top} with n ≤ bound.
std::vector<FinSet> e1_forms(const Dcpo& d, std::uint64_t bound) {
  std::vector<FinSet> out{FinSet::single(d, Elem::a()), FinSet::single(d, Elem::top())};
  for (std::uint64_t n = 0; n <= bound; ++n) {
    out.push_back(FinSet::single(d, Elem::nat(n)));
    out.push_back(FinSet::make(d, {Elem::a(), Elem::nat(n)}));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Elem> e1_points(std::uint64_t bound) {
  std::vector<Elem> out;
  for (std::uint64_t n = 0; n <= bound; ++n) out.push_back(Elem::nat(n));
  out.push_back(Elem::a());
  out.push_back(Elem::top());
  return out;
}

// Omega nets on ExampleOne built from a small track alphabet, period ≤ 2.
std::vector<Net> e1_nets() {
  const std::vector<Track> alphabet{Track::ascend(), Track::constant(Elem::a()),
                                    Track::constant(Elem::top()), Track::constant(Elem::nat(0)),
                                    Track::constant(Elem::nat(2))};
  std::vector<Net> out;
  for (const auto& t : alphabet) out.push_back(Net::omega({t}));
  for (const auto& t0 : alphabet) {
    for (const auto& t1 : alphabet) out.push_back(Net::omega({t0, t1}));
  }
  return out;
}

json finset_json(const Dcpo& d, const FinSet& f) { return io::finset_to_json(d, f); }

struct Triple {
  Net net;
  Ideal ideal;
  Elem x;
};

class Sampler {
 public:
  Sampler(const FinitePoset& p, std::uint64_t seed, const std::vector<IndexDcpo>& indices)
      : n_(p.size()), rng_(seed), indices_(indices) {}

  Triple next(bool nontrivial) {
    const bool omega = coin();
    const Elem x = Elem::id(pick(n_));
    if (!omega) {
      const IndexDcpo& idx = indices_[pick(indices_.size())];
      std::vector<Elem> values(idx.size());
      for (auto& v : values) v = Elem::id(pick(n_));
      const IdealKind kind = nontrivial || coin() ? IdealKind::Eventual : IdealKind::TrivialAll;
      return {Net::finite(idx, std::move(values)), Ideal::make(kind, idx), x};
    }
    std::vector<Track> tracks(1 + pick(3));
    for (auto& t : tracks) t = Track::constant(Elem::id(pick(n_)));
    static constexpr IdealKind kinds[] = {IdealKind::Eventual, IdealKind::FiniteSets,
                                          IdealKind::DensityZero, IdealKind::TrivialAll};
    const IdealKind kind = kinds[pick(nontrivial ? 3 : 4)];
    return {Net::omega(std::move(tracks)), Ideal::make(kind, IndexDcpo::omega()), x};
  }

 private:
  std::size_t pick(std::size_t bound) {
    return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng_);
  }
  bool coin() { return pick(2) == 1; }

  std::size_t n_;
  std::mt19937_64 rng_;
  const std::vector<IndexDcpo>& indices_;
};

json triple_json(const Dcpo& d, const Triple& t) {
  return {{"net", io::net_to_json(d, t.net)}, {"ideal", io::ideal_to_json(t.ideal)},
          {"point", d.format(t.x)}};
}

json open_json(const FinitePoset& p, Mask u) { return io::set_to_json(Dcpo::finite(p), SetRep(u)); }

// First open of `a` missing from `b`.
std::optional<Mask> first_missing(const Topology& a, const Topology& b) {
  for (Mask u : a.opens()) {
    if (!std::binary_search(b.opens().begin(), b.opens().end(), u)) return u;
  }
  return std::nullopt;
}

void compare_topologies(Tally& t, const FinitePoset& p, std::string_view check, const Topology& a,
                        const Topology& b) {
  const auto missing = first_missing(a, b);
  t.check(check, !missing, [&] {
    return json{{"open", open_json(p, *missing)},
                {"left", std::string(to_string(a.kind()))},
                {"right", std::string(to_string(b.kind()))}};
  });
}

// ------------------------------------------------------------------- suites

void suite_exampleone(Context& ctx, SuiteReport& report) {
  ctx.coverage.hit({"set_way_below", "classify", "converges_GIS", "converges_IS", "level_set",
                    "ideal_member", "is_gi_liminf"});
  on_example_one(report, [](const Dcpo& d, Tally& t) {
    const FinSet a = FinSet::single(d, Elem::a());
    for (std::uint64_t n = 0; n <= 100; ++n) {
      const FinSet an = FinSet::make(d, {Elem::a(), Elem::nat(n)});
      t.check("apair_way_below_a", set_way_below(d, an, a), [&] { return json{{"n", n}}; });
    }
    const E1Family pairs{{{E1FamilyPart::Kind::APairRange, 0, std::nullopt, std::nullopt}}};
    t.check("meet_of_apairs_is_up_a", pairs.intersection_of_upsets() == d.up(Elem::a()).symbolic(),
            [&] { return json{{"meet", pairs.intersection_of_upsets().to_string()}}; });

    const Net net = Net::omega({Track::ascend(), Track::constant(Elem::a())});
    const Ideal i0 = Ideal::make(IdealKind::Eventual, IndexDcpo::omega());
    const auto gis = converges_GIS(d, net, Elem::a(), i0);
    t.check("gis_to_a", gis.holds && check_gis_witness(d, net, Elem::a(), i0, *gis.family),
            [&] { return io::verdict_to_json(d, gis); });
    const auto is = converges_IS(d, net, Elem::a(), i0);
    t.check("not_is_to_a", !is.holds, [&] { return io::verdict_to_json(d, is); });
    const auto gi = is_gi_liminf(d, net, Elem::a(), i0);
    t.check("gi_liminf_a", gi.holds, [&] { return io::verdict_to_json(d, gi); });

    const auto cls = classify(d);
    t.check("dcpo", cls.is_dcpo);
    t.check("quasi_continuous", cls.is_quasi_continuous);
    t.check("not_continuous", !cls.is_continuous);
    t.check("not_meet_continuous", !cls.is_meet_continuous);

    const auto odd_prefix = OmegaSet(2, bit(1), {0, 2, 4, 6, 8});
    const auto lv5 = level_set(d, net, d.up(Elem::nat(5)));
    t.check("level_up_5", std::get<OmegaSet>(lv5) == odd_prefix,
            [&] { return json{{"level", io::index_set_to_json(lv5)}}; });
    const auto lva5 = level_set(d, net, up_of(d, FinSet::make(d, {Elem::a(), Elem::nat(5)})));
    t.check("level_up_a5", std::get<OmegaSet>(lva5) == OmegaSet::finite({0, 2, 4, 6, 8}),
            [&] { return json{{"level", io::index_set_to_json(lva5)}}; });

    const Ideal dz = Ideal::make(IdealKind::DensityZero, IndexDcpo::omega());
    t.check("eventual_finite_member", ideal_member(i0, OmegaSet::finite({0, 5, 9})));
    t.check("density_evens_not_member", !ideal_member(dz, OmegaSet::residue(0, 2)));
    t.check("eventual_odds_not_member", !ideal_member(i0, OmegaSet::residue(1, 2)));
  });
}

void suite_order(Context& ctx, SuiteReport& report) {
  ctx.coverage.hit({"build_finite_poset", "leq", "up_closure", "is_directed", "directed_sup",
                    "enumerate_directed_subsets", "truncate_example_one", "smyth_leq",
                    "set_way_below"});
  per_poset(ctx, report, [](const FinitePoset& p, std::size_t, Tally& t) {
    const Dcpo d = Dcpo::finite(p);
    const std::size_t n = p.size();
    std::size_t with_greatest = 0;
    for (Mask s = 1; s <= p.all(); ++s) {
      const bool directed = d.is_directed(SetRep(s));
      const bool greatest = p.greatest(s).has_value();
      with_greatest += greatest ? 1 : 0;
      t.check("directed_iff_greatest", directed == greatest && directed == is_directed_pairwise(p, s),
              [&] { return json{{"set", open_json(p, s)}}; });
      if (directed) {
        const Elem sup = d.directed_sup(SetRep(s));
        bool least = true;
        for (std::size_t u = 0; u < n; ++u) {
          const bool bound = subset(s, p.down(u));
          if (bound && !p.leq(sup.index(), u)) least = false;
          if (has(s, u) && !p.leq(u, sup.index())) least = false;
        }
        t.check("sup_is_least_upper_bound", least, [&] { return json{{"set", open_json(p, s)}}; });
      }
      const Mask up = p.up_closure(s);
      const Mask down = p.down_closure(s);
      bool ok = subset(s, up) && subset(s, down) && p.up_closure(up) == up &&
                p.down_closure(down) == down;
      for (std::size_t y = 0; y < n && ok; ++y) {
        ok = subset(up, p.up_closure(s | bit(y))) && subset(down, p.down_closure(s | bit(y)));
      }
      t.check("closure_laws", ok, [&] { return json{{"set", open_json(p, s)}}; });
    }
    t.check("directed_subset_count", enumerate_directed_subsets(p).size() == with_greatest);

    // Smyth and way-below properties over every antichain pair, then chains
    // G ≤ E ≪ F ≤ H through precomputed tables.
    const auto sets = antichain_sets(d);
    const std::size_t m = sets.size();
    std::vector<char> wb(m * m);
    std::vector<char> sl(m * m);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        wb[i * m + j] = set_way_below(d, sets[i], sets[j]);
        sl[i * m + j] = smyth_leq(d, sets[i], sets[j]);
        t.check("way_below_implies_smyth", !wb[i * m + j] || sl[i * m + j], [&] {
          return json{{"g", finset_json(d, sets[i])}, {"h", finset_json(d, sets[j])}};
        });
        if (wb[i * m + j]) {
          bool each = true;
          for (Elem h : sets[j].members()) each = each && set_way_below(d, sets[i], FinSet::single(d, h));
          t.check("way_below_each_member", each, [&] {
            return json{{"g", finset_json(d, sets[i])}, {"h", finset_json(d, sets[j])}};
          });
        }
      }
    }
    std::size_t bad = 0;
    for (std::size_t e = 0; e < m; ++e) {
      for (std::size_t f = 0; f < m; ++f) {
        if (!wb[e * m + f]) continue;
        for (std::size_t g = 0; g < m; ++g) {
          if (!sl[g * m + e]) continue;
          for (std::size_t h = 0; h < m; ++h) {
            if (sl[f * m + h] && !wb[g * m + h]) ++bad;
          }
        }
      }
    }
    t.check("smyth_way_below_sandwich", bad == 0, [&] { return json{{"violations", bad}}; });
  });

  on_example_one(report, [](const Dcpo& d, Tally& t) {
    t.check("truncation_shape", truncate_example_one(3).size() == 6);
    std::vector<E1Set> shapes;
    const std::vector<std::optional<std::uint64_t>> tails{std::nullopt, 0, 2, 4};
    for (unsigned fin = 0; fin < 8; ++fin) {
      std::vector<std::uint64_t> nats;
      for (std::uint64_t k = 0; k < 3; ++k) {
        if (fin & (1U << k)) nats.push_back(k);
      }
      for (const auto& tail : tails) {
        for (int flags = 0; flags < 4; ++flags) shapes.emplace_back(nats, tail, flags & 1, flags & 2);
      }
    }
    const auto points = e1_points(6);
    for (const auto& s : shapes) {
      t.check("double_complement", s.complement().complement() == s,
              [&] { return json{{"set", s.to_string()}}; });
      const SetRep sr(s);
      const SetRep up = d.up_closure(sr);
      const SetRep down = d.down_closure(sr);
      t.check("closure_laws", d.subset_of(sr, up) && d.subset_of(sr, down) && d.up_closure(up) == up &&
                                  d.down_closure(down) == down,
              [&] { return json{{"set", s.to_string()}}; });
      if (d.is_directed(sr)) {
        const Elem sup = d.directed_sup(sr);
        bool least = true;
        for (Elem u : points) {
          bool bound = !s.tail_start() || u.is_top();
          for (Elem x : points) bound = bound && (!s.contains(x) || d.leq(x, u));
          if (bound && !d.leq(sup, u)) least = false;
        }
        for (Elem x : points) {
          if (s.contains(x) && !d.leq(x, sup)) least = false;
        }
        t.check("sup_is_least_upper_bound", least, [&] { return json{{"set", s.to_string()}}; });
      }
    }
    for (const auto& s : shapes) {
      for (const auto& r : shapes) {
        const bool ok = s.unite(r).complement() == s.complement().intersect(r.complement()) &&
                        s.intersect(r).complement() == s.complement().unite(r.complement());
        t.check("de_morgan", ok, [&] { return json{{"s", s.to_string()}, {"t", r.to_string()}}; });
      }
    }
    const auto forms = e1_forms(d, 3);
    std::size_t bad = 0;
    for (const auto& g : forms) {
      for (const auto& e : forms) {
        if (!smyth_leq(d, g, e)) continue;
        for (const auto& f : forms) {
          if (!set_way_below(d, e, f)) continue;
          for (const auto& h : forms) {
            if (smyth_leq(d, f, h) && !set_way_below(d, g, h)) ++bad;
          }
        }
      }
    }
    t.check("smyth_way_below_sandwich", bad == 0, [&] { return json{{"violations", bad}}; });
    for (const auto& g : forms) {
      for (const auto& h : forms) {
        t.check("way_below_implies_smyth", !set_way_below(d, g, h) || smyth_leq(d, g, h),
                [&] { return json{{"g", finset_json(d, g)}, {"h", finset_json(d, h)}}; });
      }
    }
  });
}

void suite_collapse(Context& ctx, SuiteReport& report) {
  ctx.coverage.hit({"point_way_below", "smyth_leq", "set_way_below", "scott_topology", "is_scott_open",
                    "leq"});
  per_poset(ctx, report, [](const FinitePoset& p, std::size_t, Tally& t) {
    const Dcpo d = Dcpo::finite(p);
    for (std::size_t x = 0; x < p.size(); ++x) {
      for (std::size_t y = 0; y < p.size(); ++y) {
        t.check("point_way_below_is_leq", point_way_below(d, Elem::id(x), Elem::id(y)) == p.leq(x, y),
                [&] { return json{{"x", p.element_name(x)}, {"y", p.element_name(y)}}; });
      }
    }
    const auto sets = antichain_sets(d);
    for (const auto& g : sets) {
      for (const auto& h : sets) {
        t.check("set_way_below_is_smyth", set_way_below(d, g, h) == smyth_leq(d, g, h),
                [&] { return json{{"g", finset_json(d, g)}, {"h", finset_json(d, h)}}; });
      }
    }
    const Topology lawson = lawson_topology(p);
    t.check("lawson_discrete", lawson.same_opens(discrete_topology(p.size())));
    const Topology scott = scott_topology(p, Exec::Serial);
    const auto uppers = upper_sets(p);
    t.check("scott_is_upper_sets", scott.opens() == uppers);
    bool pred = true;
    for (Mask s = 0; s <= p.all(); ++s) {
      pred = pred && is_scott_open(d, SetRep(s)) == std::binary_search(uppers.begin(), uppers.end(), s);
    }
    t.check("scott_open_predicate", pred);
  });
}

void suite_prop1(Context& ctx, SuiteReport& report) {
  ctx.coverage.hit({"interpolate", "way_up", "interior", "fin_of", "scott_topology"});
  per_poset(ctx, report, [](const FinitePoset& p, std::size_t, Tally& t) {
    const Dcpo d = Dcpo::finite(p);
    const Topology scott = scott_topology(p, Exec::Serial);
    const auto sets = antichain_sets(d);
    for (const auto& h : sets) {
      for (std::size_t x = 0; x < p.size(); ++x) {
        const FinSet xs = FinSet::single(d, Elem::id(x));
        if (!set_way_below(d, h, xs)) continue;
        const FinSet f = interpolate(d, h, Elem::id(x));
        t.check("interpolation", set_way_below(d, h, f) && set_way_below(d, f, xs), [&] {
          return json{{"h", finset_json(d, h)}, {"x", p.element_name(x)}, {"f", finset_json(d, f)}};
        });
      }
      t.check("interior_of_up_is_way_up", interior(scott, up_of(d, h)) == way_up(d, h),
              [&] { return json{{"f", finset_json(d, h)}}; });
    }
    for (Mask u : scott.opens()) {
      Mask covered = 0;
      for (const auto& f : sets) {
        const Mask w = way_up(d, f).bits();
        if (subset(w, u)) covered |= w;
      }
      t.check("way_up_basis", covered == u, [&] { return json{{"open", open_json(p, u)}}; });
    }
    for (std::size_t x = 0; x < p.size(); ++x) {
      const FinFamily fin = fin_of(d, Elem::id(x));
      SetRep meet = d.whole();
      for (const auto& f : fin.sets()) meet = d.intersect(meet, up_of(d, f));
      t.check("fin_directed_with_meet_up_x",
              is_smyth_directed(d, fin) && meet == d.up(Elem::id(x)),
              [&] { return json{{"x", p.element_name(x)}}; });
    }
  });

  on_example_one(report, [](const Dcpo& d, Tally& t) {
    const Topology scott = Topology::example_one(TopologyKind::Scott);
    const auto forms = e1_forms(d, 4);
    for (const auto& f : forms) {
      t.check("interior_of_up_is_way_up", interior(scott, up_of(d, f)) == way_up(d, f),
              [&] { return json{{"f", finset_json(d, f)}}; });
    }
    for (Elem x : e1_points(5)) {
      const FinFamily fin = fin_of(d, x);
      t.check("fin_directed_with_meet_up_x",
              is_smyth_directed(d, fin) &&
                  SetRep(fin.schema().intersection_of_upsets()) == d.up(x),
              [&] { return json{{"x", d.format(x)}, {"fin", fin.schema().to_string()}}; });
      for (const auto& h : forms) {
        if (!set_way_below(d, h, FinSet::single(d, x))) continue;
        const FinSet f = interpolate(d, h, x);
        t.check("interpolation", set_way_below(d, h, f) && set_way_below(d, f, FinSet::single(d, x)),
                [&] { return json{{"h", finset_json(d, h)}, {"x", d.format(x)}, {"f", finset_json(d, f)}}; });
      }
    }
    // Sampled opens: every point of a Scott-open U lies in some ⇑F ⊆ U.
    std::vector<E1Set> opens{E1Set::all()};
    for (std::uint64_t k = 0; k <= 4; ++k) {
      const E1Set tail = E1Set::nats_from(k).unite(E1Set::singleton(Elem::top()));
      opens.push_back(tail);
      opens.push_back(tail.unite(E1Set::singleton(Elem::a())));
    }
    opens.push_back(E1Set::singleton(Elem::a()));
    for (const auto& u : opens) {
      const SetRep us(u);
      if (!is_scott_open(d, us)) continue;
      bool ok = true;
      for (Elem x : e1_points(6)) {
        if (!u.contains(x)) continue;
        bool found = false;
        for (const auto& f : e1_forms(d, 6)) {
          const SetRep w = way_up(d, f);
          if (d.contains(w, x) && d.subset_of(w, us)) found = true;
        }
        ok = ok && found;
      }
      t.check("way_up_basis", ok, [&] { return json{{"open", u.to_string()}}; });
    }
  });
}

void suite_prop2(Context& ctx, SuiteReport& report) {
  ctx.coverage.hit({"derive_convergence_topology", "scott_topology"});
  per_poset(ctx, report, [&](const FinitePoset& p, std::size_t, Tally& t) {
    const Topology scott = scott_topology(p, Exec::Serial);
    const Topology derived = ctx.derived(p, ConvergenceMode::IS);
    compare_topologies(t, p, "scott_within_derived_is", scott, derived);
    compare_topologies(t, p, "derived_is_within_scott", derived, scott);
  });
}

void suite_prop4(Context& ctx, SuiteReport& report) {
  ctx.coverage.hit({"converges_IS", "converges_GIS"});
  per_poset(ctx, report, [&](const FinitePoset& p, std::size_t index, Tally& t) {
    const Dcpo d = Dcpo::finite(p);
    Sampler sampler(p, ctx.params.seed + index, ctx.sample_indices);
    for (std::size_t k = 0; k < ctx.params.samples; ++k) {
      const Triple tr = sampler.next(false);
      const auto is = converges_IS(d, tr.net, tr.x, tr.ideal);
      const auto gis = converges_GIS(d, tr.net, tr.x, tr.ideal);
      t.check("is_implies_gis", !is.holds || gis.holds, [&] { return triple_json(d, tr); });
      if (is.holds) {
        t.check("is_witness", check_is_witness(d, tr.net, tr.x, tr.ideal, *is.directed),
                [&] { return triple_json(d, tr); });
      }
      if (gis.holds) {
        t.check("gis_witness", check_gis_witness(d, tr.net, tr.x, tr.ideal, *gis.family),
                [&] { return triple_json(d, tr); });
      }
    }
  });
}

void suite_prop5(Context& ctx, SuiteReport& report) {
  ctx.coverage.hit({"set_way_below", "converges_GIS", "level_set"});
  per_poset(ctx, report, [](const FinitePoset& p, std::size_t, Tally& t) {
    const Dcpo d = Dcpo::finite(p);
    const Ideal i0 = Ideal::make(IdealKind::Eventual, IndexDcpo::omega());
    for (const auto& g : antichain_sets(d)) {
      for (std::size_t x = 0; x < p.size(); ++x) {
        const Elem e = Elem::id(x);
        if (set_way_below(d, g, FinSet::single(d, e))) continue;
        const Net net = Net::constant(e);
        const bool ok = converges_GIS(d, net, e, i0).holds &&
                        !ideal_member(i0, level_set(d, net, up_of(d, g)));
        t.check("constant_net_separates", ok,
                [&] { return json{{"g", finset_json(d, g)}, {"x", p.element_name(x)}}; });
      }
    }
  });
}

void suite_prop6(Context& ctx, SuiteReport& report) {
  ctx.coverage.hit({"fin_of", "converges_GIS", "level_set"});
  per_poset(ctx, report, [&](const FinitePoset& p, std::size_t index, Tally& t) {
    const Dcpo d = Dcpo::finite(p);
    Sampler sampler(p, ctx.params.seed + index, ctx.sample_indices);
    for (std::size_t k = 0; k < ctx.params.samples; ++k) {
      const Triple tr = sampler.next(false);
      const FinFamily fin = fin_of(d, tr.x);
      const bool premise = std::all_of(fin.sets().begin(), fin.sets().end(), [&](const FinSet& g) {
        return ideal_member(tr.ideal, level_set(d, tr.net, up_of(d, g)));
      });
      if (!premise) continue;
      t.check("premise_gives_gis", converges_GIS(d, tr.net, tr.x, tr.ideal).holds,
              [&] { return triple_json(d, tr); });
    }
  });
  on_example_one(report, [](const Dcpo& d, Tally& t) {
    for (const auto& net : e1_nets()) {
      for (IdealKind kind : {IdealKind::Eventual, IdealKind::TrivialAll}) {
        const Ideal ideal = Ideal::make(kind, IndexDcpo::omega());
        for (Elem x : e1_points(3)) {
          const auto sample = fin_of(d, x).schema().sample(net.stable_bound() + 2);
          const bool premise = std::all_of(sample.begin(), sample.end(), [&](const FinSet& g) {
            return ideal_member(ideal, level_set(d, net, up_of(d, g)));
          });
          if (!premise) continue;
          t.check("premise_gives_gis", converges_GIS(d, net, x, ideal).holds, [&] {
            return json{{"net", io::net_to_json(d, net)}, {"ideal", to_string(kind)}, {"point", d.format(x)}};
          });
        }
      }
    }
  });
}

void suite_prop7_11(Context& ctx, SuiteReport& report) {
  ctx.coverage.hit({"lower_topology", "derive_glim_topology", "derive_convergence_topology"});
  per_poset(ctx, report, [&](const FinitePoset& p, std::size_t, Tally& t) {
    const std::size_t n = p.size();
    const std::vector<std::pair<std::string, Topology>> all{
        {"scott", scott_topology(p, Exec::Serial)},
        {"lower", lower_topology(p)},
        {"lawson", lawson_topology(p)},
        {"glim", ctx.cached(p.name() + "/glim", [&] { return derive_glim_topology(p, 4, Exec::Serial); })},
        {"derived_is", ctx.derived(p, ConvergenceMode::IS)},
        {"derived_gis", ctx.derived(p, ConvergenceMode::GIS)},
        {"derived_gi", ctx.derived(p, ConvergenceMode::GI)},
        {"discrete", discrete_topology(n)},
        {"indiscrete", indiscrete_topology(n)},
    };
    for (const auto& [name, top] : all) {
      t.check("topology_axioms", is_topology_family(n, top.opens()),
              [&] { return json{{"topology", name}}; });
    }
  });
}

void suite_prop8(Context& ctx, SuiteReport& report) {
  ctx.coverage.hit({"converges_topological", "derive_convergence_topology"});
  per_poset(ctx, report, [](const FinitePoset& p, std::size_t, Tally& t) {
    const Dcpo d = Dcpo::finite(p);
    const NetClassConfig config{.max_index_points = 3, .max_omega_period = 2};
    const auto nets = enumerate_net_class(p, config);
    const Topology derived = derive_convergence_topology(p, ConvergenceMode::GIS, nets, Exec::Serial);
    const std::size_t n = p.size();
    const std::vector<Topology> pool{indiscrete_topology(n), scott_topology(p, Exec::Serial),
                                     lawson_topology(p), discrete_topology(n)};
    for (const auto& top : pool) {
      bool respects = true;
      for (const auto& [net, ideal] : nets) {
        for (std::size_t x = 0; x < n && respects; ++x) {
          const Elem e = Elem::id(x);
          if (converges_GIS(d, net, e, ideal).holds) {
            respects = converges_topological(d, net, e, ideal, top).holds;
          }
        }
        if (!respects) break;
      }
      const bool ok = !respects || top.coarser_than(derived);
      t.check("finest_topology", ok, [&] {
        return json{{"topology", std::string(to_string(top.kind()))}, {"respects", respects}};
      });
    }
  });
}

void suite_prop9_10(Context& ctx, SuiteReport& report) {
  ctx.coverage.hit({"derive_glim_topology", "derive_convergence_topology"});
  per_poset(ctx, report, [&](const FinitePoset& p, std::size_t, Tally& t) {
    const auto both = derive_glim_topology_both(p, 4, Exec::Serial);
    compare_topologies(t, p, "naive_within_reduced", both.naive, both.reduced);
    compare_topologies(t, p, "reduced_within_naive", both.reduced, both.naive);
    const Topology gis = ctx.derived(p, ConvergenceMode::GIS);
    compare_topologies(t, p, "glim_within_derived_gis", both.reduced, gis);
    compare_topologies(t, p, "derived_gis_within_glim", gis, both.reduced);
  });
}

void suite_thm1(Context& ctx, SuiteReport& report) {
  ctx.coverage.hit({"derive_glim_topology", "scott_topology"});
  per_poset(ctx, report, [](const FinitePoset& p, std::size_t, Tally& t) {
    const auto both = derive_glim_topology_both(p, 4, Exec::Serial);
    const Topology scott = scott_topology(p, Exec::Serial);
    t.check("naive_equals_scott", both.naive.same_opens(scott));
    t.check("reduced_equals_scott", both.reduced.same_opens(scott));
  });
}

void suite_thm2_if(Context& ctx, SuiteReport& report) {
  ctx.coverage.hit({"converges_GIS", "converges_topological"});
  per_poset(ctx, report, [&](const FinitePoset& p, std::size_t index, Tally& t) {
    const Dcpo d = Dcpo::finite(p);
    const Topology scott = scott_topology(p, Exec::Serial);
    Sampler sampler(p, ctx.params.seed + index, ctx.sample_indices);
    for (std::size_t k = 0; k < ctx.params.samples; ++k) {
      const Triple tr = sampler.next(true);
      const bool gis = converges_GIS(d, tr.net, tr.x, tr.ideal).holds;
      const bool topo = converges_topological(d, tr.net, tr.x, tr.ideal, scott).holds;
      t.check("gis_iff_scott_convergence", gis == topo, [&] { return triple_json(d, tr); });
      const Ideal trivial = Ideal::make(IdealKind::TrivialAll, tr.net.index());
      t.check("trivial_ideal_always_gis", converges_GIS(d, tr.net, tr.x, trivial).holds,
              [&] { return triple_json(d, tr); });
    }
  });
}

// The first class member that GI-converges to a point of U without its level
// set of U landing in the ideal.
json defeating_net(const FinitePoset& p, const std::vector<NetWithIdeal>& nets, Mask u) {
  const Dcpo d = Dcpo::finite(p);
  for (const auto& [net, ideal] : nets) {
    if (ideal_member(ideal, level_set(d, net, SetRep(u)))) continue;
    for (std::size_t x = 0; x < p.size(); ++x) {
      if (has(u, x) && is_gi_liminf(d, net, Elem::id(x), ideal).holds) {
        return {{"open", open_json(p, u)}, {"net", io::net_to_json(d, net)},
                {"ideal", io::ideal_to_json(ideal)}, {"point", p.element_name(x)},
                {"level", io::index_set_to_json(level_set(d, net, SetRep(u)))}};
      }
    }
  }
  return {{"open", open_json(p, u)}};
}

void suite_prop12(Context& ctx, SuiteReport& report) {
  ctx.coverage.hit({"derive_convergence_topology", "is_gi_liminf", "gi_family"});
  report.notes.push_back(
      "finite_index_class restricts the net class to finite directed index posets; default_class adds "
      "omega nets, where a GI-liminf need not be a Lawson limit");
  per_poset(ctx, report, [&](const FinitePoset& p, std::size_t, Tally& t) {
    const Topology lawson = lawson_topology(p);
    const Topology gi = ctx.derived(p, ConvergenceMode::GI);
    const auto missing = first_missing(lawson, gi);
    t.check("lawson_within_derived_gi/default_class", !missing, [&] {
      return defeating_net(p, enumerate_net_class(p, NetClassConfig{}), *missing);
    });
    auto finite_only = enumerate_net_class(p, NetClassConfig{});
    std::erase_if(finite_only, [](const NetWithIdeal& c) { return c.net.is_omega(); });
    const Topology gi_finite =
        derive_convergence_topology(p, ConvergenceMode::GI, finite_only, Exec::Serial);
    compare_topologies(t, p, "lawson_within_derived_gi/finite_index_class", lawson, gi_finite);
  });
}

void thm3_case(Tally& t, const Dcpo& d, const Topology& lawson, const Net& net, const Ideal& ideal,
               Elem x, std::string_view check) {
  const auto gi = is_gi_liminf(d, net, x, ideal);
  const auto topo = converges_topological(d, net, x, ideal, lawson);
  t.check(check, gi.holds == topo.holds, [&] {
    return json{{"net", io::net_to_json(d, net)}, {"ideal", io::ideal_to_json(ideal)},
                {"point", d.format(x)}, {"gi_liminf", io::verdict_to_json(d, gi)},
                {"lawson", io::verdict_to_json(d, topo)}};
  });
}

void suite_thm3(Context& ctx, SuiteReport& report) {
  ctx.coverage.hit({"is_gi_liminf", "gi_family", "converges_topological"});
  report.notes.push_back(
      "finite_index covers every net over a directed index poset of at most 3 points; omega covers "
      "constant-track omega nets of period at most 2 and the exampleone net family");
  per_poset(
      ctx, report, [](const FinitePoset& p) { return p.size() <= 4; },
      [&](const FinitePoset& p, std::size_t, Tally& t) {
        const Dcpo d = Dcpo::finite(p);
        const Topology lawson = lawson_topology(p);
        const NetClassConfig config{.max_index_points = 3, .max_omega_period = 2};
        for (const auto& [net, ideal] : enumerate_net_class(p, config)) {
          for (std::size_t x = 0; x < p.size(); ++x) {
            thm3_case(t, d, lawson, net, ideal, Elem::id(x),
                      net.is_omega() ? "gi_iff_lawson/omega" : "gi_iff_lawson/finite_index");
          }
        }
      });
  on_example_one(report, [](const Dcpo& d, Tally& t) {
    const Topology lawson = Topology::example_one(TopologyKind::Lawson);
    const Ideal i0 = Ideal::make(IdealKind::Eventual, IndexDcpo::omega());
    for (const auto& net : e1_nets()) {
      for (Elem x : e1_points(3)) thm3_case(t, d, lawson, net, i0, x, "gi_iff_lawson/omega");
    }
  });
}

void suite_thm4(Context& ctx, SuiteReport& report) {
  ctx.coverage.hit({"classify", "is_gi_liminf", "converges_topological", "level_set"});
  report.notes.push_back(
      "the hypothesis is read as the conjunction of the GI/Lawson equivalence and the eventual "
      "membership condition, checked over nets on directed index posets of at most 3 points");
  per_poset(ctx, report, [](const FinitePoset& p, std::size_t, Tally& t) {
    const Dcpo d = Dcpo::finite(p);
    const auto cls = classify(d);
    t.check("meet_continuous", cls.is_meet_continuous);
    const Topology lawson = lawson_topology(p);
    const auto sets = antichain_sets(d);
    bool hypothesis = true;
    for (const auto& j : directed_index_posets(3)) {
      const IndexDcpo idx = IndexDcpo::finite(j);
      const Ideal ideal = Ideal::make(IdealKind::Eventual, idx);
      std::vector<Elem> values(j.size(), Elem::id(0));
      while (hypothesis) {
        const Net net = Net::finite(idx, values);
        for (std::size_t x = 0; x < p.size(); ++x) {
          const Elem e = Elem::id(x);
          hypothesis = hypothesis && is_gi_liminf(d, net, e, ideal).holds ==
                                         converges_topological(d, net, e, ideal, lawson).holds;
        }
        for (const auto& f : sets) {
          if (!ideal_member(ideal, level_set(d, net, up_of(d, f)))) continue;
          const Mask up = p.up_closure(f.mask());
          bool eventually = false;
          for (std::size_t i = 0; i < j.size() && !eventually; ++i) {
            bool all = true;
            for (std::size_t k = 0; k < j.size(); ++k) {
              if (j.leq(i, k) && !has(up, values[k].index())) all = false;
            }
            eventually = all;
          }
          hypothesis = hypothesis && eventually;
        }
        std::size_t k = 0;
        while (k < values.size() && values[k].index() + 1 == p.size()) values[k++] = Elem::id(0);
        if (k == values.size()) break;
        values[k] = Elem::id(values[k].index() + 1);
      }
    }
    t.check("hypothesis_holds", hypothesis);
    t.check("continuous", !hypothesis || !cls.is_meet_continuous || cls.is_continuous);
  });
}

void suite_rudin(Context& ctx, SuiteReport& report) {
  ctx.coverage.hit({"is_directed_family", "extract_directed", "rudin_corollary_check", "is_scott_open"});
  per_poset(ctx, report, [](const FinitePoset& p, std::size_t, Tally& t) {
    const Dcpo d = Dcpo::finite(p);
    const auto sets = antichain_sets(d);
    const auto opens = upper_sets(p);
    const std::size_t m = sets.size();
    auto run = [&](std::vector<FinSet> members) {
      const FinFamily family(std::move(members));
      if (!is_directed_family(d, family)) return;
      const auto fam_json = [&] { return io::family_to_json(d, family); };
      bool extracted = false;
      try {
        const RudinWitness w = extract_directed(d, family);
        extracted = check_rudin_witness(d, family, w);
      } catch (const Error&) {
      }
      t.check("extract_directed", extracted, [&] { return json{{"family", fam_json()}}; });
      Mask meet = p.all();
      for (const auto& f : family.sets()) meet &= p.up_closure(f.mask());
      for (Mask u : opens) {
        if (!subset(meet, u)) continue;
        bool found = false;
        try {
          const FinSet f = rudin_corollary_check(d, family, SetRep(u));
          found = subset(p.up_closure(f.mask()), u);
        } catch (const Error&) {
        }
        t.check("corollary", found, [&] { return json{{"family", fam_json()}, {"open", open_json(p, u)}}; });
      }
    };
    for (std::size_t a = 0; a < m; ++a) {
      run({sets[a]});
      for (std::size_t b = a + 1; b < m; ++b) {
        run({sets[a], sets[b]});
        for (std::size_t c = b + 1; c < m; ++c) run({sets[a], sets[b], sets[c]});
      }
    }
  });
  on_example_one(report, [](const Dcpo& d, Tally& t) {
    const std::vector<FinFamily> families{
        FinFamily(E1Family{{{E1FamilyPart::Kind::APairRange, 0, std::nullopt, std::nullopt}}}),
        FinFamily(E1Family{{{E1FamilyPart::Kind::NatRange, 0, std::nullopt, std::nullopt}}}),
        FinFamily(E1Family{{{E1FamilyPart::Kind::APairRange, 2, std::nullopt, std::nullopt}}})};
    std::vector<E1Set> opens{E1Set::all()};
    for (std::uint64_t k = 0; k <= 4; ++k) {
      const E1Set tail = E1Set::nats_from(k).unite(E1Set::singleton(Elem::top()));
      opens.push_back(tail);
      opens.push_back(tail.unite(E1Set::singleton(Elem::a())));
    }
    for (const auto& family : families) {
      for (const auto& u : opens) {
        if (!family.schema().intersection_of_upsets().subset_of(u)) continue;
        bool found = false;
        try {
          const FinSet f = rudin_corollary_check(d, family, SetRep(u));
          found = d.subset_of(up_of(d, f), SetRep(u));
        } catch (const Error&) {
        }
        t.check("corollary", found, [&] {
          return json{{"family", family.schema().to_string()}, {"open", u.to_string()}};
        });
      }
    }
  });
}

using SuiteFn = void (*)(Context&, SuiteReport&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites{
      {"exampleone", suite_exampleone}, {"order", suite_order},   {"collapse", suite_collapse},
      {"prop1", suite_prop1},           {"prop2", suite_prop2},   {"prop4", suite_prop4},
      {"prop5", suite_prop5},           {"prop6", suite_prop6},   {"prop7-11", suite_prop7_11},
      {"prop8", suite_prop8},           {"prop9-10", suite_prop9_10}, {"thm1", suite_thm1},
      {"thm2-if", suite_thm2_if},       {"prop12", suite_prop12}, {"thm3", suite_thm3},
      {"thm4", suite_thm4},             {"rudin", suite_rudin},
  };
  return suites;
}

SuiteReport run_one(Context& ctx, const std::string& name, SuiteFn fn) {
  SuiteReport r;
  r.suite = name;
  r.seed = ctx.params.seed;
  const auto start = std::chrono::steady_clock::now();
  fn(ctx, r);
  r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    out.emplace_back("all");
    return out;
  }();
  return names;
}

const std::vector<std::string>& checked_operations() {
  static const std::vector<std::string> ops{
      "build_finite_poset", "leq", "up_closure", "is_directed", "directed_sup",
      "enumerate_directed_subsets", "truncate_example_one", "point_way_below", "smyth_leq",
      "set_way_below", "fin_of", "classify", "interpolate", "way_up", "scott_topology",
      "is_scott_open", "lower_topology", "interior", "derive_glim_topology", "ideal_member",
      "level_set", "converges_IS", "converges_GIS", "converges_topological", "gi_family",
      "is_gi_liminf", "derive_convergence_topology", "is_directed_family", "extract_directed",
      "rudin_corollary_check", "generate_all_posets", "run_suite", "emit_report"};
  return ops;
}

SuiteReport run_suite(std::string_view name, const SuiteParams& params) {
  const auto& reg = registry();
  const auto it = std::find_if(reg.begin(), reg.end(), [&](const auto& e) { return e.first == name; });
  if (it == reg.end() && name != "all") {
    throw Error(ErrorKind::UnknownSuite, "unknown suite '" + std::string(name) + "'");
  }
  Context ctx;
  ctx.params = params;
  ctx.corpus = build_corpus(params.max_size);
  for (const auto& j : directed_index_posets(4)) ctx.sample_indices.push_back(IndexDcpo::finite(j));
  ctx.coverage.hit({"run_suite", "generate_all_posets", "build_finite_poset"});
  if (it != reg.end()) return run_one(ctx, it->first, it->second);

  SuiteReport all;
  all.suite = "all";
  all.seed = params.seed;
  const auto start = std::chrono::steady_clock::now();
  for (const auto& [sub, fn] : reg) {
    SuiteReport r = run_one(ctx, sub, fn);
    // Each sub-report must survive both serializations unchanged.
    const json j = report_to_json(r);
    const bool round_trip = report_to_json(report_from_text(report_to_text(r))) == j &&
                            report_to_json(report_from_json(j)) == j;
    all.cases += r.cases + 1;
    all.passed += r.passed + (round_trip ? 1 : 0);
    if (!round_trip) all.failures.push_back({sub, "report", "report_round_trip", json::object()});
    all.suites.push_back({sub, r.cases, r.passed});
    for (auto& f : r.failures) all.failures.push_back(std::move(f));
    for (auto& note : r.notes) all.notes.push_back(sub + ": " + note);
  }
  ctx.coverage.hit({"emit_report"});
  all.missing_operations = ctx.coverage.missing();
  all.cases += 1;
  if (all.missing_operations.empty()) {
    all.passed += 1;
  } else {
    all.failures.push_back({"all", "coverage", "operation_coverage", {{"missing", all.missing_operations}}});
  }
  all.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return all;
}

// ------------------------------------------------------------------ reports

json report_to_json(const SuiteReport& r) {
  json failures = json::array();
  for (const auto& f : r.failures) {
    failures.push_back({{"suite", f.suite}, {"case", f.case_id}, {"check", f.check}, {"witness", f.witness}});
  }
  json out = {{"suite", r.suite}, {"cases", r.cases}, {"passed", r.passed},
              {"failures", failures}, {"seed", r.seed}, {"notes", r.notes}};
  if (r.suite == "all") {
    json suites = json::array();
    for (const auto& s : r.suites) {
      suites.push_back({{"suite", s.suite}, {"cases", s.cases}, {"passed", s.passed}});
    }
    out["suites"] = suites;
    out["coverage"] = {{"operations", checked_operations().size()}, {"missing", r.missing_operations}};
  }
  return out;
}

SuiteReport report_from_json(const json& j) {
  try {
    SuiteReport r;
    r.suite = j.at("suite").get<std::string>();
    r.cases = j.at("cases").get<std::uint64_t>();
    r.passed = j.at("passed").get<std::uint64_t>();
    r.seed = j.at("seed").get<std::uint64_t>();
    for (const auto& f : j.at("failures")) {
      r.failures.push_back({f.at("suite").get<std::string>(), f.at("case").get<std::string>(),
                            f.at("check").get<std::string>(), f.at("witness")});
    }
    if (j.contains("notes")) r.notes = j.at("notes").get<std::vector<std::string>>();
    if (j.contains("suites")) {
      for (const auto& s : j.at("suites")) {
        r.suites.push_back({s.at("suite").get<std::string>(), s.at("cases").get<std::uint64_t>(),
                            s.at("passed").get<std::uint64_t>()});
      }
    }
    if (j.contains("coverage")) {
      r.missing_operations = j.at("coverage").at("missing").get<std::vector<std::string>>();
    }
    return r;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("bad report: ") + e.what());
  }
}

std::string report_to_text(const SuiteReport& r) {
  std::ostringstream out;
  out << "suite " << r.suite << ": " << r.passed << "/" << r.cases << " passed (seed " << r.seed
      << ", " << r.wall_seconds << " s)\n";
  for (const auto& s : r.suites) {
    out << "  " << s.suite << ": " << s.passed << "/" << s.cases << "\n";
  }
  if (r.suite == "all") {
    out << "coverage " << json(r.missing_operations).dump() << "\n";
  }
  for (const auto& n : r.notes) out << "note " << json(n).dump() << "\n";
  for (const auto& f : r.failures) {
    out << "FAIL " << json{{"suite", f.suite}, {"case", f.case_id}, {"check", f.check}, {"witness", f.witness}}.dump()
        << "\n";
  }
  return out.str();
}

SuiteReport report_from_text(std::string_view text) {
  SuiteReport r;
  std::istringstream in{std::string(text)};
  std::string line;
  bool header = false;
  try {
    while (std::getline(in, line)) {
      if (line.starts_with("suite ")) {
        std::string word;
        std::istringstream h(line.substr(6));
        std::getline(h, r.suite, ':');
        char slash = 0;
        h >> r.passed >> slash >> r.cases >> word >> word >> r.seed;
        header = true;
      } else if (line.starts_with("  ")) {
        SuiteSummary s;
        std::istringstream h(line.substr(2));
        std::getline(h, s.suite, ':');
        char slash = 0;
        h >> s.passed >> slash >> s.cases;
        r.suites.push_back(s);
      } else if (line.starts_with("coverage ")) {
        r.missing_operations = json::parse(line.substr(9)).get<std::vector<std::string>>();
      } else if (line.starts_with("note ")) {
        r.notes.push_back(json::parse(line.substr(5)).get<std::string>());
      } else if (line.starts_with("FAIL ")) {
        const json f = json::parse(line.substr(5));
        r.failures.push_back({f.at("suite").get<std::string>(), f.at("case").get<std::string>(),
                              f.at("check").get<std::string>(), f.at("witness")});
      }
    }
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("bad report line: ") + e.what());
  }
  if (!header) throw Error(ErrorKind::Parse, "report text has no header line");
  return r;
}

}  // namespace domaincheck
