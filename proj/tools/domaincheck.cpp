// Command-line front end: verification suites plus one subcommand per
// checker. Posets are JSON files, corpus names, or "exampleone".

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "domaincheck/convergence.hpp"
#include "domaincheck/corpus.hpp"
#include "domaincheck/error.hpp"
#include "domaincheck/harness.hpp"
#include "domaincheck/json_io.hpp"
#include "domaincheck/rudin.hpp"
#include "domaincheck/topology.hpp"
#include "domaincheck/waybelow.hpp"

namespace dc = domaincheck;
using nlohmann::json;

namespace {

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw dc::Error(dc::ErrorKind::Parse, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw dc::Error(dc::ErrorKind::Parse, path + ": " + e.what());
  }
}

dc::Dcpo load_dcpo(const std::string& arg) {
  if (arg == "exampleone") return dc::Dcpo::example_one();
  if (std::ifstream(arg).good()) return dc::Dcpo::finite(dc::io::poset_from_json(read_json(arg)));
  for (auto& entry : dc::build_corpus(0)) {
    if (entry.poset.name() == arg) return dc::Dcpo::finite(std::move(entry.poset));
  }
  throw dc::Error(dc::ErrorKind::Parse, "no poset file or corpus entry named '" + arg + "'");
}

dc::TopologyKind parse_kind(const std::string& s) {
  if (s == "scott") return dc::TopologyKind::Scott;
  if (s == "lower") return dc::TopologyKind::Lower;
  if (s == "lawson") return dc::TopologyKind::Lawson;
  if (s == "glim") return dc::TopologyKind::Glim;
  throw dc::Error(dc::ErrorKind::Parse, "unknown topology kind '" + s + "'");
}

dc::Topology finite_topology(const dc::FinitePoset& p, dc::TopologyKind kind) {
  switch (kind) {
    case dc::TopologyKind::Scott: return dc::scott_topology(p);
    case dc::TopologyKind::Lower: return dc::lower_topology(p);
    case dc::TopologyKind::Lawson: return dc::lawson_topology(p);
    default: return dc::derive_glim_topology(p);
  }
}

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Order-theoretic verification workbench for dcpos, way-below and ideal convergence"};
  app.require_subcommand(1);

  std::string suite = "all";
  std::size_t max_size = 5;
  std::uint64_t seed = 0;
  std::size_t samples = 1000;
  std::string format = "json";
  bool serial = false;
  auto* verify = app.add_subcommand("verify", "Run a verification suite over the corpus");
  verify->add_option("--suite", suite, "Suite name or 'all'")
      ->check(CLI::IsMember(dc::suite_names()));
  verify->add_option("--max-size", max_size, "Largest exhaustively generated poset")
      ->check(CLI::Range(1, 6));
  verify->add_option("--seed", seed, "Seed for sampled cases (DOMAINCHECK_SEED overrides)");
  verify->add_option("--samples", samples, "Sampled triples per poset")->check(CLI::PositiveNumber);
  verify->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
  verify->add_flag("--serial", serial, "Run without OpenMP fan-out");

  auto* corpus = app.add_subcommand("corpus", "Inspect the poset corpus");
  auto* corpus_list = corpus->add_subcommand("list", "List corpus posets");
  corpus_list->add_option("--max-size", max_size)->check(CLI::Range(0, 6));
  corpus->require_subcommand(1);

  std::string poset;
  auto* classify = app.add_subcommand("classify", "Decide dcpo, continuity and meet-continuity");
  classify->add_option("--poset", poset)->required();

  bool sets = false;
  auto* waybelow = app.add_subcommand("waybelow", "Way-below relation table");
  waybelow->add_option("--poset", poset)->required();
  waybelow->add_flag("--sets", sets, "Relate antichains instead of points");

  std::string kind = "scott";
  auto* topology = app.add_subcommand("topology", "Open sets of a topology on a finite poset");
  topology->add_option("--poset", poset)->required();
  topology->add_option("--kind", kind)->check(CLI::IsMember({"scott", "lower", "lawson", "glim"}));

  std::string mode = "gis";
  std::string net_path;
  std::string ideal_path;
  std::string point;
  std::string conv_topology = "scott";
  auto* converge = app.add_subcommand("converge", "Check one net against one point");
  converge->add_option("--mode", mode)->check(CLI::IsMember({"is", "gis", "gi", "topo"}));
  converge->add_option("--topology", conv_topology)
      ->check(CLI::IsMember({"scott", "lower", "lawson"}));
  converge->add_option("--poset", poset)->required();
  converge->add_option("--net", net_path)->required()->check(CLI::ExistingFile);
  converge->add_option("--ideal", ideal_path)->required()->check(CLI::ExistingFile);
  converge->add_option("--point", point)->required();

  std::string family_path;
  auto* rudin = app.add_subcommand("rudin", "Extract a Rudin witness from a directed family");
  rudin->add_option("--poset", poset)->required();
  rudin->add_option("--family", family_path)->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*verify) {
      if (const char* env = std::getenv("DOMAINCHECK_SEED")) seed = std::stoull(env);
      dc::SuiteParams params{max_size, seed, samples, serial ? dc::Exec::Serial : dc::Exec::Parallel};
      const dc::SuiteReport report = dc::run_suite(suite, params);
      if (format == "json") {
        print(dc::report_to_json(report));
      } else {
        std::cout << dc::report_to_text(report);
      }
      return report.ok() ? 0 : 1;
    }
    if (*corpus_list) {
      for (const auto& e : dc::build_corpus(max_size)) {
        std::cout << e.poset.name() << ' ' << e.poset.size() << (e.exhaustive ? " exhaustive" : " named")
                  << '\n';
      }
      return 0;
    }
    const dc::Dcpo d = load_dcpo(poset);
    if (*classify) {
      print(dc::io::classify_to_json(d, dc::classify(d)));
    } else if (*waybelow) {
      const dc::FinitePoset& p = d.poset();
      json table = json::array();
      if (sets) {
        std::vector<dc::FinSet> all;
        for (dc::Mask m : dc::antichains(p)) {
          if (m != 0) all.push_back(dc::FinSet::from_mask(d, m));
        }
        for (const auto& g : all) {
          for (const auto& h : all) {
            if (dc::set_way_below(d, g, h)) {
              table.push_back({dc::io::finset_to_json(d, g), dc::io::finset_to_json(d, h)});
            }
          }
        }
      } else {
        for (std::size_t x = 0; x < p.size(); ++x) {
          for (std::size_t y = 0; y < p.size(); ++y) {
            if (dc::point_way_below(d, dc::Elem::id(x), dc::Elem::id(y))) {
              table.push_back({p.element_name(x), p.element_name(y)});
            }
          }
        }
      }
      print({{"poset", p.name()}, {"sets", sets}, {"way_below", table}});
    } else if (*topology) {
      print(dc::io::topology_to_json(d, finite_topology(d.poset(), parse_kind(kind))));
    } else if (*converge) {
      const dc::Net net = dc::io::net_from_json(d, read_json(net_path));
      const dc::Ideal ideal = dc::io::ideal_from_json(read_json(ideal_path), net.index());
      const dc::Elem x = d.parse(point);
      dc::ConvergenceVerdict v;
      if (mode == "is") {
        v = dc::converges_IS(d, net, x, ideal);
      } else if (mode == "gis") {
        v = dc::converges_GIS(d, net, x, ideal);
      } else if (mode == "gi") {
        v = dc::is_gi_liminf(d, net, x, ideal);
      } else {
        const dc::TopologyKind k = parse_kind(conv_topology);
        const dc::Topology t =
            d.is_finite() ? finite_topology(d.poset(), k) : dc::Topology::example_one(k);
        v = dc::converges_topological(d, net, x, ideal, t);
      }
      print(dc::io::verdict_to_json(d, v));
    } else if (*rudin) {
      const dc::FinFamily family = dc::io::family_from_json(d, read_json(family_path));
      print(dc::io::rudin_to_json(d, dc::extract_directed(d, family)));
    }
    return 0;
  } catch (const dc::Error& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }
}
