#include "clusterseed/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "clusterseed/errors.hpp"
#include "clusterseed/presets.hpp"

namespace clusterseed {

Json to_json(const IceQuiver& q) {
  Json j;
  j["n"] = q.size();
  j["b"] = q.quiver().matrix();
  Json frozen = Json::array();
  for (std::size_t v : q.frozen_vertices()) frozen.push_back(v + 1);
  j["frozen"] = frozen;
  return j;
}

IceQuiver quiver_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("b")) throw ParseError("quiver JSON needs an object with a \"b\" matrix");
  std::vector<std::vector<Multiplicity>> b;
  try {
    b = j.at("b").get<std::vector<std::vector<Multiplicity>>>();
  } catch (const nlohmann::json::exception&) {
    throw ParseError("quiver \"b\" must be a matrix of integers");
  }
  if (j.contains("n")) {
    if (!j["n"].is_number_unsigned() || j["n"].get<std::size_t>() != b.size())
      throw ParseError("quiver \"n\" does not match the size of \"b\"");
  }
  Quiver q = Quiver::from_matrix(b);
  std::vector<bool> frozen(q.size(), false);
  if (j.contains("frozen")) {
    if (!j["frozen"].is_array()) throw ParseError("quiver \"frozen\" must be a list of vertices");
    for (const auto& v : j["frozen"]) {
      if (!v.is_number_integer()) throw ParseError("frozen vertices must be integers");
      const auto k = v.get<long long>();
      if (k < 1 || static_cast<std::size_t>(k) > q.size()) throw ParseError("frozen vertex out of range");
      frozen[static_cast<std::size_t>(k - 1)] = true;
    }
  }
  return IceQuiver(std::move(q), std::move(frozen));
}

IceQuiver quiver_from_input(const Json& j) {
  if (j.is_string()) return IceQuiver(preset(j.get<std::string>()));
  if (j.is_object() && j.contains("preset")) {
    if (!j["preset"].is_string()) throw ParseError("\"preset\" must be a string");
    return IceQuiver(preset(j["preset"].get<std::string>()));
  }
  if (j.is_object() && j.contains("quiver")) return quiver_from_json(j["quiver"]);
  return quiver_from_json(j);
}

IceQuiver load_quiver(const std::string& preset_or_path) {
  const auto names = preset_names();
  if (std::find(names.begin(), names.end(), preset_or_path) != names.end()) return IceQuiver(preset(preset_or_path));
  std::ifstream in(preset_or_path);
  if (!in) throw ParseError("'" + preset_or_path + "' is neither a preset nor a readable file");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(preset_or_path + ": " + e.what());
  }
  return quiver_from_input(j);
}

Json to_json(const LabelledSeed& s) {
  Json j = to_json(s.quiver());
  Json cluster = Json::array();
  for (const auto& x : s.cluster()) cluster.push_back(x.to_string());
  j["cluster"] = cluster;
  return j;
}

LabelledSeed seed_from_json(const Json& j) {
  IceQuiver q = quiver_from_json(j);
  if (!j.contains("cluster") || !j["cluster"].is_array()) throw ParseError("seed JSON needs a \"cluster\" list");
  std::vector<LaurentPoly> cluster;
  for (const auto& x : j["cluster"]) {
    if (!x.is_string()) throw ParseError("cluster entries must be strings");
    cluster.push_back(parse_laurent(x.get<std::string>(), q.size()));
  }
  return LabelledSeed(std::move(q), std::move(cluster));
}

Json to_json(const LabelledGraph& g) {
  Json j;
  j["vertices"] = g.vertices.size();
  Json labels = Json::array();
  for (std::size_t l : g.labels) labels.push_back(l + 1);
  j["labels"] = labels;
  Json edges = Json::array();
  for (const auto& e : g.edges) edges.push_back({e.u, e.v, e.label + 1});
  j["edges"] = edges;
  return j;
}

std::string to_string(Level l) {
  switch (l) {
    case Level::Seed:
      return "seed";
    case Level::Fingerprint:
      return "fingerprint";
    case Level::Quiver:
      return "quiver";
  }
  return "?";
}

std::string to_string(Status s) { return s == Status::Closed ? "closed" : "budget-exhausted"; }

Json to_json(const ExplorationReport& r, bool payloads) {
  Json j;
  j["level"] = to_string(r.level);
  j["status"] = to_string(r.status);
  j["vertices"] = r.size();
  Json mut = Json::array();
  for (std::size_t v : r.mutable_vertices) mut.push_back(v + 1);
  j["mutable_vertices"] = mut;
  j["max_depth"] = r.max_depth;
  j["max_multiplicity"] = r.max_multiplicity;
  if (r.closed()) {
    std::vector<const IceQuiver*> distinct;
    for (const auto& q : r.quivers)
      if (std::none_of(distinct.begin(), distinct.end(), [&](const IceQuiver* d) { return *d == q; }))
        distinct.push_back(&q);
    j["distinct_quivers"] = distinct.size();
  }
  j["graph"] = to_json(r.graph);
  if (payloads) {
    Json qs = Json::array();
    for (const auto& q : r.quivers) qs.push_back(q.quiver().matrix());
    j["quivers"] = qs;
    if (r.level == Level::Seed) {
      Json cl = Json::array();
      for (const auto& s : r.seeds) {
        Json one = Json::array();
        for (const auto& x : s.cluster()) one.push_back(x.to_string());
        cl.push_back(one);
      }
      j["clusters"] = cl;
    }
  }
  return j;
}

Json to_json(const AutomorphismGroup& g) {
  Json j;
  j["order"] = g.order();
  j["abelian"] = g.abelian;
  Json orders = Json::array();
  for (const auto& [k, count] : g.element_orders)
    for (std::size_t c = 0; c < count; ++c) orders.push_back(k);
  j["element_orders"] = orders;
  Json gens = Json::array();
  for (std::size_t idx : g.generators) gens.push_back(g.elements[idx]);
  j["generators"] = gens;
  return j;
}

Json to_json(const SuiteReport& r) {
  Json j;
  j["suite"] = r.suite;
  j["passed"] = r.all_passed();
  Json results = Json::array();
  for (const auto& c : r.results) {
    Json one;
    one["check"] = c.name;
    one["expected"] = c.expected;
    one["observed"] = c.observed;
    one["pass"] = c.pass;
    if (!c.note.empty()) one["note"] = c.note;
    results.push_back(one);
  }
  j["results"] = results;
  return j;
}

DotAnnotation parse_annotation(const std::string& name) {
  if (name == "none") return DotAnnotation::None;
  if (name == "quiver") return DotAnnotation::Quiver;
  if (name == "seed") return DotAnnotation::Seed;
  throw InvalidArgument("unknown annotation '" + name + "' (expected none, quiver or seed)");
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string seed_note(const LabelledSeed& s) {
  std::string out = s.quiver().quiver().to_string();
  for (const auto& x : s.cluster()) out += "\\n" + dot_escape(x.to_string());
  return out;
}

}  // namespace

std::string to_dot(const LabelledGraph& g, const std::vector<std::string>& vertex_notes) {
  std::ostringstream out;
  out << "graph G {\n";
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    out << "  " << v << " [label=\"" << v;
    if (v < vertex_notes.size() && !vertex_notes[v].empty()) out << "\\n" << vertex_notes[v];
    out << "\"];\n";
  }
  for (const auto& e : g.edges) out << "  " << e.u << " -- " << e.v << " [label=\"" << e.label + 1 << "\"];\n";
  out << "}\n";
  return out.str();
}

std::vector<std::string> vertex_notes(const ExplorationReport& r, DotAnnotation a) {
  std::vector<std::string> notes;
  if (a == DotAnnotation::None) return notes;
  for (std::size_t v = 0; v < r.size(); ++v) {
    if (a == DotAnnotation::Seed && r.level == Level::Seed) {
      notes.push_back(seed_note(r.seeds[v]));
    } else {
      notes.push_back(r.quivers[v].quiver().to_string());
    }
  }
  return notes;
}

std::vector<std::string> class_notes(const ExplorationReport& r, const Partition& p, DotAnnotation a) {
  const auto all = vertex_notes(r, a);
  std::vector<std::string> notes;
  if (all.empty()) return notes;
  for (const auto& members : p.members) notes.push_back(all[members.front()]);
  return notes;
}

}  // namespace clusterseed
