#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "clusterseed/explore.hpp"
#include "clusterseed/quiver.hpp"
#include "clusterseed/quotient.hpp"
#include "clusterseed/seed.hpp"
#include "clusterseed/verify.hpp"

namespace clusterseed {

using Json = nlohmann::ordered_json;

/// {"n": 2, "b": [[0,1],[-1,0]], "frozen": [3, 4]}; frozen vertices are
/// one-based and "frozen" may be omitted.
Json to_json(const IceQuiver& q);
/// Throws ParseError on malformed input and InvalidArgument on an invalid
/// matrix.
IceQuiver quiver_from_json(const Json& j);

/// A quiver object, {"preset": name}, {"quiver": {...}} or a bare preset
/// name string.
IceQuiver quiver_from_input(const Json& j);
/// A preset name, or else the path of a JSON file in any form accepted by
/// quiver_from_input.
IceQuiver load_quiver(const std::string& preset_or_path);

/// Quiver JSON plus "cluster": rendered Laurent strings.
Json to_json(const LabelledSeed& s);
/// Inverse of to_json for seeds; variables range over x1..x{n}.
LabelledSeed seed_from_json(const Json& j);

/// {"vertices": count, "labels": [...], "edges": [[u, v, label], ...]}, with
/// one-based labels and zero-based vertices.
Json to_json(const LabelledGraph& g);

/// Exploration summary. With `payloads`, also the quiver of every vertex and
/// (at seed level) every cluster.
Json to_json(const ExplorationReport& r, bool payloads = true);

/// {"order", "abelian", "element_orders" (sorted multiset), "generators"
/// (each an image list of seed indices)}.
Json to_json(const AutomorphismGroup& g);

Json to_json(const SuiteReport& r);

std::string to_string(Level l);
std::string to_string(Status s);

enum class DotAnnotation { None, Quiver, Seed };
DotAnnotation parse_annotation(const std::string& name);

/// Graphviz text of a labelled multigraph; loops are kept. `vertex_notes`,
/// when non-empty, adds a second label line per vertex.
std::string to_dot(const LabelledGraph& g, const std::vector<std::string>& vertex_notes = {});

/// Per-vertex notes for to_dot. Seed notes fall back to quivers on reports
/// without seeds.
std::vector<std::string> vertex_notes(const ExplorationReport& r, DotAnnotation a);
/// Notes for a quotient graph: the annotation of each class's least member.
std::vector<std::string> class_notes(const ExplorationReport& r, const Partition& p, DotAnnotation a);

}  // namespace clusterseed
