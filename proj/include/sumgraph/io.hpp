#pragma once

#include "sumgraph/edge_coloring.hpp"
#include "sumgraph/edge_sum.hpp"
#include "sumgraph/graph.hpp"

#include <json.hpp>

#include <string>

namespace sumgraph::io {

/// Key order is part of the document formats, so everything goes through
/// ordered_json.
using Json = nlohmann::ordered_json;

/// {"labels":[...],"edges":[[lo,hi],...]}
auto graph_to_json(const IntegralSumGraph & graph) -> Json;

/// Throws ValidationError when the document is malformed or its edge list
/// is not exactly G+(labels).
auto graph_from_json(const Json & doc) -> IntegralSumGraph;

/// {"classes":[{"sum":i,"edges":[[lo,hi],...]},...]}, non-empty classes only.
auto classes_to_json(const EdgeSumPartition & partition) -> Json;

/// {"palette":k,"edges":[{"e":[lo,hi],"c":j},...]}
auto coloring_to_json(const EdgeColoring & coloring) -> Json;
auto coloring_from_json(const Json & doc) -> EdgeColoring;

/// [[[a,b],...],...] or {"classes": that}; pairs may be in either order.
auto certificate_from_json(const Json & doc) -> ColorCertificate;

auto report_to_json(const VerificationReport & report) -> Json;

/// Names for c_1..c_12 are gray, orange, cyan, purple, blue, green, brown,
/// violet, magenta, red, olive, black; later colors get a golden-ratio hue
/// rotation written as a Graphviz "H S V" string.
auto palette_name(int color) -> std::string;

/// Undirected DOT; vertex ids are the labels.
auto graph_to_dot(const IntegralSumGraph & graph) -> std::string;

/// Each edge gets color="<palette name>" and label="c<j>".
auto coloring_to_dot(const IntegralSumGraph & graph, const EdgeColoring & coloring) -> std::string;

/// Compact single-line form used for every emitted document.
auto dump(const Json & doc) -> std::string;

} // namespace sumgraph::io
