#include "sumgraph/edge_coloring.hpp"
#include "sumgraph/edge_sum.hpp"

#include <map>
#include <set>
#include <string>

using std::map;
using std::set;
using std::size_t;
using std::string;
using std::to_string;
using std::vector;

namespace sumgraph {

namespace {

auto edge_text(const Edge & e) -> string
{
    return "(" + to_string(e.lo) + "," + to_string(e.hi) + ")";
}

struct Tagged
{
    Edge edge;
    size_t tag;
};

// Shared check for colorings and certificates: every item is an edge of the
// graph carrying a class tag.
auto verify_tagged(const IntegralSumGraph & graph, const vector<Tagged> & items, size_t palette) -> VerificationReport
{
    VerificationReport report;
    report.palette_size = palette;

    map<Edge, size_t> seen;
    for (const auto & [edge, tag] : items) {
        if (! graph.has_edge(edge.lo, edge.hi))
            throw ForeignEdgeError("edge " + edge_text(edge) + " is not in the graph");
        auto [it, fresh] = seen.emplace(edge, tag);
        if (! fresh) {
            report.pairwise_disjoint = false;
            report.issues.push_back("edge " + edge_text(edge) + " appears in classes " + to_string(it->second + 1)
                + " and " + to_string(tag + 1));
        }
    }

    for (const auto & e : graph.edges())
        if (! seen.contains(e)) {
            report.covers_all_edges = false;
            report.issues.push_back("edge " + edge_text(e) + " is uncolored");
        }

    // (vertex, class) -> first edge seen there
    map<std::pair<Label, size_t>, Edge> at;
    for (const auto & [edge, tag] : items)
        for (auto v : { edge.lo, edge.hi }) {
            auto [it, fresh] = at.emplace(std::pair{ v, tag }, edge);
            if (! fresh && ! (it->second == edge)) {
                report.proper_at_every_vertex = false;
                report.issues.push_back("edges " + edge_text(it->second) + " and " + edge_text(edge) + " share vertex "
                    + to_string(v) + " in class " + to_string(tag + 1));
            }
        }

    return report;
}

} // namespace

auto EdgeColoring::assign(const Edge & edge, int color) -> void
{
    if (color < 1)
        throw ConsistencyError("color index must be positive, got " + to_string(color));
    auto [it, fresh] = _colors.emplace(edge, color);
    if (! fresh)
        throw ConsistencyError("edge " + edge_text(edge) + " colored twice (c" + to_string(it->second) + ", c"
            + to_string(color) + ")");
    _palette = std::max(_palette, color);
}

auto EdgeColoring::color_of(const Edge & edge) const -> std::optional<int>
{
    auto it = _colors.find(edge);
    if (it == _colors.end())
        return std::nullopt;
    return it->second;
}

auto EdgeColoring::to_certificate() const -> ColorCertificate
{
    ColorCertificate cert;
    cert.classes.resize(_palette);
    for (const auto & [edge, color] : _colors)
        cert.classes[color - 1].push_back(edge);
    return cert;
}

auto EdgeColoring::from_certificate(const ColorCertificate & cert) -> EdgeColoring
{
    EdgeColoring out;
    for (size_t k = 0; k < cert.classes.size(); ++k)
        for (const auto & e : cert.classes[k])
            out.assign(e, static_cast<int>(k + 1));
    return out;
}

auto theorem_coloring(Label r, Label s) -> EdgeColoring
{
    if (! (r < 0 && s >= 2 && -r <= s))
        throw DomainError("theorem coloring needs r < 0, s >= 2, -r <= s; got r = " + to_string(r) + ", s = "
            + to_string(s));

    const Label R = -r, half = R / 2;
    auto c = [](Label k) { return static_cast<int>(k); };
    EdgeColoring out;

    for (Label j = 1; j <= s; ++j)
        out.assign({ 0, j }, c(j));
    for (Label i = 1; i <= R; ++i)
        out.assign({ 0, -i }, c(i + s));
    for (Label i = 1; i <= R; ++i)
        for (Label j = 1; j <= s - 1; ++j)
            out.assign({ -i, j }, c(i + j));
    for (Label i = 1; i <= R; ++i)
        out.assign({ -i, s }, i <= half ? c(2 * i + s) : c(i - half));
    for (Label i = 1; i <= s; ++i)
        for (Label j = i + 1; i + j <= s; ++j)
            out.assign({ i, j }, c(i + j + R));
    for (Label i = 1; i <= R; ++i)
        for (Label j = i + 1; i + j <= R; ++j)
            out.assign({ -i, -j }, c(i + j + s));

    auto graph = interval_graph(r, s);
    if (out.size() != graph.size())
        throw ConsistencyError("theorem coloring colored " + to_string(out.size()) + " of " + to_string(graph.size())
            + " edges");
    for (const auto & e : graph.edges())
        if (! out.color_of(e))
            throw ConsistencyError("theorem coloring missed edge " + edge_text(e));
    return out;
}

auto edge_sum_coloring(const IntegralSumGraph & graph) -> EdgeColoring
{
    EdgeColoring out;
    int rank = 0;
    for (const auto & cls : edge_sum_classes(graph).non_empty()) {
        ++rank;
        for (const auto & e : cls.edges)
            out.assign(e, rank);
    }
    return out;
}

auto certificate_g0s(Label s) -> ColorCertificate
{
    if (s < 1)
        throw DomainError("G_{0,s} certificate needs s >= 1");
    ColorCertificate cert;
    for (Label k = 1; k <= s; ++k) {
        auto & cls = cert.classes.emplace_back();
        for (Label a = 0; a < k - a; ++a)
            cls.emplace_back(a, k - a);
    }
    return cert;
}

auto certificate_g_minus1_s(Label s) -> ColorCertificate
{
    if (s < 2)
        throw DomainError("G_{-1,s} certificate needs s >= 2");
    ColorCertificate cert;
    for (Label k = 1; k <= s - 1; ++k) {
        auto & cls = cert.classes.emplace_back();
        cls.emplace_back(0, k);
        cls.emplace_back(-1, k + 1);
        for (Label a = 1; a < k - a; ++a)
            cls.emplace_back(a, k - a);
    }
    cert.classes.push_back({ Edge(0, s), Edge(-1, 1) });
    auto & last = cert.classes.emplace_back();
    last.emplace_back(0, -1);
    for (Label a = 1; a < s - a; ++a)
        last.emplace_back(a, s - a);
    return cert;
}

auto certificate_g_ss(Label s) -> ColorCertificate
{
    if (s < 2 || s > 6)
        throw DomainError("stored G_{-s,s} certificates exist for 2 <= s <= 6, got " + to_string(s));
    return stored_certificate("g_ss_" + to_string(s)).certificate;
}

auto verify_proper(const IntegralSumGraph & graph, const EdgeColoring & coloring) -> VerificationReport
{
    vector<Tagged> items;
    for (const auto & [edge, color] : coloring.assignment())
        items.push_back({ edge, static_cast<size_t>(color - 1) });
    return verify_tagged(graph, items, static_cast<size_t>(coloring.palette_size()));
}

auto verify_proper(const IntegralSumGraph & graph, const ColorCertificate & certificate) -> VerificationReport
{
    vector<Tagged> items;
    for (size_t k = 0; k < certificate.classes.size(); ++k)
        for (const auto & e : certificate.classes[k])
            items.push_back({ e, k });
    return verify_tagged(graph, items, certificate.classes.size());
}

auto chi_via_certificate(const IntegralSumGraph & graph, const ColorCertificate & certificate) -> ChromaticBounds
{
    auto report = verify_proper(graph, certificate);
    if (! report.valid()) {
        string why = report.issues.empty() ? string("invalid") : report.issues.front();
        throw CertificateError("certificate fails verification: " + why);
    }
    auto delta = graph.max_degree();
    auto classes = certificate.classes.size();
    return { delta, classes, classes == delta };
}

} // namespace sumgraph
