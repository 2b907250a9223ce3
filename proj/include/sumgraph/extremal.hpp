#pragma once

#include "sumgraph/closed_forms.hpp"
#include "sumgraph/graph.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

namespace sumgraph {

/// A vertex map from one interval graph into another.
struct EmbeddingWitness
{
    IntervalSpec source;
    IntervalSpec target;
    std::map<Label, Label> vertex_map;
    std::size_t source_edges = 0;
    std::size_t target_edges = 0;
    bool injective = false;
    bool edges_preserved = false;

    /// Target strictly larger, so the inclusion is proper.
    auto proper() const -> bool { return target_edges > source_edges; }
    auto valid() const -> bool { return injective && edges_preserved && proper(); }
};

/// x -> x - 1 from G_{0,s} into G_{-1,s-1}, s >= 2, checked edge by edge.
auto shift_embedding(Label s) -> EmbeddingWitness;

struct IntervalRow
{
    IntervalSpec spec;
    std::size_t edges;
};

struct IntervalMaximum
{
    /// Every admissible (r, s) with s - r = n, from r = 0 downwards.
    std::vector<IntervalRow> table;
    /// All rows attaining the maximum edge count.
    std::vector<IntervalSpec> maximizers;
    /// The balanced split (-floor(n/2), ceil(n/2)).
    IntervalSpec balanced;
    std::size_t max_edges = 0;

    /// The balanced split when it attains the maximum, else the first maximizer.
    auto best() const -> IntervalSpec { return balanced_is_maximum() ? balanced : maximizers.front(); }
    auto balanced_is_maximum() const -> bool
    {
        return std::find(maximizers.begin(), maximizers.end(), balanced) != maximizers.end();
    }
    auto balanced_is_unique_maximum() const -> bool
    {
        return maximizers.size() == 1 && maximizers.front() == balanced;
    }
};

/// Edge counts of all interval graphs of order n + 1, n >= 2.
auto interval_maximum(std::int64_t n) -> IntervalMaximum;

} // namespace sumgraph
