#include "sumgraph/edge_sum.hpp"

#include <string>

namespace sumgraph {

EdgeSumPartition::EdgeSumPartition(const IntegralSumGraph & graph)
    : _order(graph.order())
{
    for (auto v : graph.labels())
        _classes.emplace(v, std::vector<Edge>{});
    // edges are already lexicographic, so each class inherits that order
    for (const auto & e : graph.edges()) {
        auto it = _classes.find(e.sum());
        if (it == _classes.end())
            throw ConsistencyError("edge sum outside the label set");
        it->second.push_back(e);
    }
}

auto EdgeSumPartition::class_of(Label i) const -> const std::vector<Edge> &
{
    auto it = _classes.find(i);
    if (it == _classes.end())
        throw LookupError("label " + std::to_string(i) + " is not a vertex");
    return it->second;
}

auto EdgeSumPartition::non_empty() const -> std::vector<SumClass>
{
    std::vector<SumClass> out;
    for (const auto & [sum, edges] : _classes)
        if (! edges.empty())
            out.push_back({ sum, edges });
    return out;
}

auto EdgeSumPartition::non_empty_count() const -> std::size_t
{
    std::size_t n = 0;
    for (const auto & [_, edges] : _classes)
        n += edges.empty() ? 0 : 1;
    return n;
}

auto edge_sum_classes(const IntegralSumGraph & graph) -> EdgeSumPartition
{
    return EdgeSumPartition(graph);
}

auto edge_sum_chromatic_number(const IntegralSumGraph & graph) -> std::size_t
{
    return EdgeSumPartition(graph).non_empty_count();
}

auto f_set(const IntegralSumGraph & graph, Label i) -> FSet
{
    EdgeSumPartition p(graph);
    return { i, p.class_of(i) };
}

auto is_saturated(const IntegralSumGraph & graph) -> bool
{
    return EdgeSumPartition(graph).non_empty_count() == graph.order();
}

} // namespace sumgraph
