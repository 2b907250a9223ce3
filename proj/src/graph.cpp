#include "sumgraph/graph.hpp"

#include <string>

using std::to_string;
using std::vector;

namespace sumgraph {

auto build_graph(const LabelSet & labels) -> IntegralSumGraph
{
    return IntegralSumGraph::build(labels);
}

auto interval_graph(Label r, Label s) -> IntegralSumGraph
{
    if (r > 0)
        throw DomainError("interval start r = " + to_string(r) + " must be <= 0");
    if (s < 0)
        throw DomainError("interval end s = " + to_string(s) + " must be >= 0");
    if (r + s < 0)
        throw ConventionError("interval [" + to_string(r) + ", " + to_string(s) + "] violates r + s >= 0");
    return IntegralSumGraph::build(LabelSet::interval(r, s));
}

auto join_construct(Label r, Label s) -> IntegralSumGraph
{
    if (! (r < 0 && 0 < s))
        throw DomainError("join construction needs r < 0 < s");

    auto negative = IntegralSumGraph::build(LabelSet::interval(r, -1));
    auto positive = IntegralSumGraph::build(LabelSet::interval(1, s));

    vector<Edge> edges;
    edges.insert(edges.end(), negative.edges().begin(), negative.edges().end());
    edges.insert(edges.end(), positive.edges().begin(), positive.edges().end());

    // join: every vertex of each part meets every vertex of the others
    for (auto v : negative.labels())
        edges.emplace_back(v, 0);
    for (auto v : positive.labels())
        edges.emplace_back(0, v);
    for (auto u : negative.labels())
        for (auto v : positive.labels())
            edges.emplace_back(u, v);

    return IntegralSumGraph::assemble(LabelSet::interval(r, s), std::move(edges));
}

auto degree(const IntegralSumGraph & graph, Label v) -> std::size_t
{
    return graph.degree(v);
}

} // namespace sumgraph
