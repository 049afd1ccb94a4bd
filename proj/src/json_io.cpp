#include "domaincheck/json_io.hpp"

#include <algorithm>

#include "domaincheck/error.hpp"

namespace domaincheck::io {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw Error(ErrorKind::Parse, std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

std::string text(const json& j) {
  if (!j.is_string()) throw Error(ErrorKind::Parse, "expected a string, got " + j.dump());
  return j.get<std::string>();
}

std::vector<std::string> sorted_names(const FinitePoset& p, Mask m) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (has(m, i)) out.push_back(p.element_name(i));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

json poset_to_json(const FinitePoset& p) {
  std::vector<std::string> elements = p.element_names();
  std::sort(elements.begin(), elements.end());
  std::vector<std::pair<std::string, std::string>> le;
  for (auto [x, y] : p.relation()) le.emplace_back(p.element_name(x), p.element_name(y));
  for (std::size_t i = 0; i < p.size(); ++i) le.emplace_back(p.element_name(i), p.element_name(i));
  std::sort(le.begin(), le.end());
  le.erase(std::unique(le.begin(), le.end()), le.end());
  json pairs = json::array();
  for (const auto& [x, y] : le) pairs.push_back({x, y});
  return {{"name", p.name()}, {"elements", elements}, {"le", pairs}};
}

FinitePoset poset_from_json(const json& j) {
  const std::string name = j.contains("name") ? text(j.at("name")) : std::string("poset");
  const json& elems = field(j, "elements");
  if (!elems.is_array()) throw Error(ErrorKind::Parse, "'elements' must be an array");
  std::vector<std::string> elements;
  for (const auto& e : elems) elements.push_back(text(e));
  std::vector<LePair> pairs;
  if (j.contains("le")) {
    for (const auto& pr : j.at("le")) {
      if (!pr.is_array() || pr.size() != 2) throw Error(ErrorKind::Parse, "bad le pair " + pr.dump());
      pairs.emplace_back(text(pr[0]), text(pr[1]));
    }
  }
  return FinitePoset::build(name, std::move(elements), pairs);
}

json elem_to_json(const Dcpo& d, Elem x) { return d.format(x); }

json set_to_json(const Dcpo& d, const SetRep& s) {
  if (d.is_finite()) return sorted_names(d.poset(), s.bits());
  return d.format(s);
}

json finset_to_json(const Dcpo& d, const FinSet& f) {
  json out = json::array();
  for (Elem e : f.members()) out.push_back(d.format(e));
  return out;
}

FinSet finset_from_json(const Dcpo& d, const json& j) {
  if (!j.is_array()) throw Error(ErrorKind::Parse, "a finite set must be an array");
  std::vector<Elem> members;
  for (const auto& e : j) members.push_back(d.parse(text(e)));
  return FinSet::make(d, std::move(members));
}

json family_to_json(const Dcpo& d, const FinFamily& f) {
  if (!f.is_explicit()) return {{"schema", f.schema().to_string()}};
  json sets = json::array();
  for (const auto& s : f.sets()) sets.push_back(finset_to_json(d, s));
  return {{"sets", sets}};
}

FinFamily family_from_json(const Dcpo& d, const json& j) {
  const json& sets = field(j, "sets");
  if (!sets.is_array()) throw Error(ErrorKind::Parse, "'sets' must be an array");
  std::vector<FinSet> out;
  for (const auto& s : sets) out.push_back(finset_from_json(d, s));
  return FinFamily(std::move(out));
}

json net_to_json(const Dcpo& d, const Net& net) {
  if (net.is_omega()) {
    json tracks = json::array();
    for (const auto& t : net.tracks()) {
      if (t.kind == Track::Kind::Ascend) {
        tracks.push_back({{"kind", "ascend"}});
      } else {
        tracks.push_back({{"kind", "const"}, {"value", d.format(t.value)}});
      }
    }
    return {{"index", "omega"}, {"period", net.period()}, {"tracks", tracks}};
  }
  const FinitePoset& j = net.index().poset();
  json map = json::object();
  for (std::size_t i = 0; i < j.size(); ++i) map[j.element_name(i)] = d.format(net.values()[i]);
  return {{"index", poset_to_json(j)}, {"map", map}};
}

Net net_from_json(const Dcpo& d, const json& j) {
  const json& index = field(j, "index");
  if (index.is_string()) {
    if (index.get<std::string>() != "omega") {
      throw Error(ErrorKind::Parse, "unknown index '" + index.get<std::string>() + "'");
    }
    std::vector<Track> tracks;
    for (const auto& t : field(j, "tracks")) {
      const std::string kind = text(field(t, "kind"));
      if (kind == "ascend") {
        tracks.push_back(Track::ascend());
      } else if (kind == "const") {
        tracks.push_back(Track::constant(d.parse(text(field(t, "value")))));
      } else {
        throw Error(ErrorKind::Parse, "unknown track kind '" + kind + "'");
      }
    }
    if (j.contains("period") && j.at("period").get<std::size_t>() != tracks.size()) {
      throw Error(ErrorKind::InvalidNet, "period does not match the number of tracks");
    }
    Net net = Net::omega(std::move(tracks));
    net.validate(d);
    return net;
  }
  IndexDcpo idx = IndexDcpo::finite(poset_from_json(index));
  const json& map = field(j, "map");
  std::vector<Elem> values;
  for (const auto& name : idx.poset().element_names()) {
    if (!map.contains(name)) throw Error(ErrorKind::InvalidNet, "net has no value at " + name);
    values.push_back(d.parse(text(map.at(name))));
  }
  if (map.size() != values.size()) throw Error(ErrorKind::InvalidNet, "net maps unknown indices");
  Net net = Net::finite(std::move(idx), std::move(values));
  net.validate(d);
  return net;
}

json ideal_to_json(const Ideal& ideal) { return {{"kind", to_string(ideal.kind())}}; }

Ideal ideal_from_json(const json& j, const IndexDcpo& index) {
  return Ideal::make(parse_ideal_kind(text(field(j, "kind"))), index);
}

json index_set_to_json(const IndexSet& s) {
  if (const auto* o = std::get_if<OmegaSet>(&s)) return o->to_string();
  json out = json::array();
  const Mask m = std::get<Mask>(s);
  for (std::size_t i = 0; i < kMaxElements; ++i) {
    if (has(m, i)) out.push_back(i);
  }
  return out;
}

json topology_to_json(const Dcpo& d, const Topology& t) {
  const FinitePoset& p = d.poset();
  std::vector<std::vector<std::string>> opens;
  for (Mask u : t.opens()) opens.push_back(sorted_names(p, u));
  std::sort(opens.begin(), opens.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return {{"kind", std::string(to_string(t.kind()))}, {"opens", opens}};
}

json verdict_to_json(const Dcpo& d, const ConvergenceVerdict& v) {
  json out = {{"holds", v.holds}};
  if (v.directed) out["directed"] = set_to_json(d, *v.directed);
  if (v.family) out["family"] = family_to_json(d, *v.family);
  if (v.open_set) out["open_set"] = set_to_json(d, *v.open_set);
  if (v.failing_member) out["failing_member"] = finset_to_json(d, *v.failing_member);
  if (!v.note.empty()) out["note"] = v.note;
  return out;
}

json classify_to_json(const Dcpo& d, const ClassifyReport& r) {
  auto witness = [&](const std::optional<ClassifyWitness>& w) -> json {
    if (!w) return nullptr;
    json out = {{"note", w->note}};
    if (w->element) out["element"] = d.format(*w->element);
    if (w->open_set) out["open_set"] = set_to_json(d, *w->open_set);
    return out;
  };
  return {{"poset", d.name()},
          {"dcpo", r.is_dcpo},
          {"continuous", r.is_continuous},
          {"quasi_continuous", r.is_quasi_continuous},
          {"meet_continuous", r.is_meet_continuous},
          {"witnesses",
           {{"dcpo", witness(r.dcpo_witness)},
            {"continuous", witness(r.continuous_witness)},
            {"quasi_continuous", witness(r.quasi_continuous_witness)},
            {"meet_continuous", witness(r.meet_continuous_witness)}}}};
}

json rudin_to_json(const Dcpo& d, const RudinWitness& w) {
  json meets = json::array();
  for (const auto& [f, e] : w.meets) meets.push_back({{"set", finset_to_json(d, f)}, {"meet", d.format(e)}});
  return {{"directed", set_to_json(d, w.directed)}, {"meets", meets}};
}

}  // namespace domaincheck::io
