#include "sumgraph/io.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>

using std::string;

namespace sumgraph::io {

namespace {

auto edge_json(const Edge & e) -> Json
{
    return Json::array({ e.lo, e.hi });
}

auto read_pair(const Json & pair) -> Edge
{
    if (! pair.is_array() || pair.size() != 2 || ! pair[0].is_number_integer() || ! pair[1].is_number_integer())
        throw ValidationError("edge must be a pair of integers, got " + pair.dump());
    return { pair[0].get<Label>(), pair[1].get<Label>() };
}

} // namespace

auto graph_to_json(const IntegralSumGraph & graph) -> Json
{
    Json doc;
    doc["labels"] = Json::array();
    for (auto v : graph.labels())
        doc["labels"].push_back(v);
    doc["edges"] = Json::array();
    for (const auto & e : graph.edges())
        doc["edges"].push_back(edge_json(e));
    return doc;
}

auto graph_from_json(const Json & doc) -> IntegralSumGraph
{
    if (! doc.is_object() || ! doc.contains("labels") || ! doc["labels"].is_array())
        throw ValidationError("graph document needs a \"labels\" array");

    std::vector<Label> labels;
    for (const auto & v : doc["labels"]) {
        if (! v.is_number_integer())
            throw ValidationError("label must be an integer, got " + v.dump());
        labels.push_back(v.get<Label>());
    }
    auto graph = build_graph(LabelSet(std::move(labels)));

    if (doc.contains("edges")) {
        if (! doc["edges"].is_array())
            throw ValidationError("\"edges\" must be an array");
        std::vector<Edge> edges;
        for (const auto & pair : doc["edges"])
            edges.push_back(read_pair(pair));
        auto given = IntegralSumGraph::assemble(graph.label_set(), std::move(edges));
        if (! (given == graph))
            throw ValidationError("edge list is not the integral sum graph of the labels");
    }
    return graph;
}

auto classes_to_json(const EdgeSumPartition & partition) -> Json
{
    Json doc;
    doc["classes"] = Json::array();
    for (const auto & cls : partition.non_empty()) {
        Json entry;
        entry["sum"] = cls.sum;
        entry["edges"] = Json::array();
        for (const auto & e : cls.edges)
            entry["edges"].push_back(edge_json(e));
        doc["classes"].push_back(std::move(entry));
    }
    return doc;
}

auto coloring_to_json(const EdgeColoring & coloring) -> Json
{
    Json doc;
    doc["palette"] = coloring.palette_size();
    doc["edges"] = Json::array();
    for (const auto & [edge, color] : coloring.assignment()) {
        Json entry;
        entry["e"] = edge_json(edge);
        entry["c"] = color;
        doc["edges"].push_back(std::move(entry));
    }
    return doc;
}

auto coloring_from_json(const Json & doc) -> EdgeColoring
{
    if (! doc.is_object() || ! doc.contains("edges") || ! doc["edges"].is_array())
        throw ValidationError("coloring document needs an \"edges\" array");
    EdgeColoring out;
    for (const auto & entry : doc["edges"]) {
        if (! entry.is_object() || ! entry.contains("e") || ! entry.contains("c") || ! entry["c"].is_number_integer())
            throw ValidationError("coloring entry must look like {\"e\":[lo,hi],\"c\":j}");
        try {
            out.assign(read_pair(entry["e"]), entry["c"].get<int>());
        }
        catch (const ConsistencyError & e) {
            throw ValidationError(e.what());
        }
    }
    return out;
}

auto certificate_from_json(const Json & doc) -> ColorCertificate
{
    const Json & classes = doc.is_object() && doc.contains("classes") ? doc["classes"] : doc;
    if (! classes.is_array())
        throw ValidationError("certificate must be an array of classes");
    ColorCertificate out;
    for (const auto & cls : classes) {
        if (! cls.is_array())
            throw ValidationError("certificate class must be an array of edges");
        auto & edges = out.classes.emplace_back();
        for (const auto & pair : cls)
            edges.push_back(read_pair(pair));
    }
    return out;
}

auto report_to_json(const VerificationReport & report) -> Json
{
    Json doc;
    doc["covers_all_edges"] = report.covers_all_edges;
    doc["pairwise_disjoint"] = report.pairwise_disjoint;
    doc["proper_at_every_vertex"] = report.proper_at_every_vertex;
    doc["palette_size"] = report.palette_size;
    doc["valid"] = report.valid();
    doc["issues"] = report.issues;
    return doc;
}

auto palette_name(int color) -> string
{
    static const std::array<const char *, 12> names = { "gray", "orange", "cyan", "purple", "blue", "green", "brown",
        "violet", "magenta", "red", "olive", "black" };
    if (color < 1)
        throw DomainError("color index must be positive");
    if (color <= 12)
        return names[color - 1];

    double hue = std::fmod(0.1 + (color - 13) * 0.6180339887498949, 1.0);
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f 0.800 0.900", hue);
    return buf;
}

auto graph_to_dot(const IntegralSumGraph & graph) -> string
{
    std::ostringstream out;
    out << "graph G {\n";
    for (auto v : graph.labels())
        out << "  " << v << ";\n";
    for (const auto & e : graph.edges())
        out << "  " << e.lo << " -- " << e.hi << ";\n";
    out << "}\n";
    return out.str();
}

auto coloring_to_dot(const IntegralSumGraph & graph, const EdgeColoring & coloring) -> string
{
    std::ostringstream out;
    out << "graph G {\n";
    for (auto v : graph.labels())
        out << "  " << v << ";\n";
    for (const auto & e : graph.edges()) {
        out << "  " << e.lo << " -- " << e.hi;
        if (auto c = coloring.color_of(e))
            out << " [color=\"" << palette_name(*c) << "\", label=\"c" << *c << "\"]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

auto dump(const Json & doc) -> string
{
    return doc.dump();
}

} // namespace sumgraph::io
