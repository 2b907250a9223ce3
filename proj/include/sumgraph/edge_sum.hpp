#pragma once

#include "sumgraph/graph.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace sumgraph {

/// One edge-sum class E_i: every edge whose endpoint labels add to `sum`.
struct SumClass
{
    Label sum;
    std::vector<Edge> edges;
};

/// The edge-sum classes of a graph, keyed by every label of S. Empty
/// classes are kept so any i in S can be queried, but `non_empty()` and
/// the class count skip them.
class EdgeSumPartition
{
public:
    explicit EdgeSumPartition(const IntegralSumGraph & graph);

    auto graph_order() const -> std::size_t { return _order; }

    /// E_i for a label i of S; throws LookupError otherwise.
    auto class_of(Label i) const -> const std::vector<Edge> &;

    /// Non-empty classes, ascending by sum.
    auto non_empty() const -> std::vector<SumClass>;

    auto non_empty_count() const -> std::size_t;

    auto all() const -> const std::map<Label, std::vector<Edge>> & { return _classes; }

private:
    std::size_t _order;
    std::map<Label, std::vector<Edge>> _classes;
};

/// F_i = {i} together with E_i.
struct FSet
{
    Label label;
    std::vector<Edge> edges;
};

auto edge_sum_classes(const IntegralSumGraph & graph) -> EdgeSumPartition;

/// Number of non-empty edge-sum classes.
auto edge_sum_chromatic_number(const IntegralSumGraph & graph) -> std::size_t;

auto f_set(const IntegralSumGraph & graph, Label i) -> FSet;

/// True iff every label of S is the sum of some edge.
auto is_saturated(const IntegralSumGraph & graph) -> bool;

} // namespace sumgraph
