#include "sumgraph/extremal.hpp"

#include <set>
#include <string>

namespace sumgraph {

auto shift_embedding(Label s) -> EmbeddingWitness
{
    if (s < 2)
        throw DomainError("shift embedding needs s >= 2, got " + std::to_string(s));

    EmbeddingWitness w{ IntervalSpec(0, s), IntervalSpec(-1, s - 1), {}, 0, 0, false, false };
    auto source = interval_graph(0, s);
    auto target = interval_graph(-1, s - 1);

    std::set<Label> images;
    for (auto v : source.labels()) {
        w.vertex_map.emplace(v, v - 1);
        images.insert(v - 1);
    }
    w.injective = images.size() == source.order();

    w.edges_preserved = true;
    for (const auto & e : source.edges())
        if (! target.has_edge(w.vertex_map.at(e.lo), w.vertex_map.at(e.hi)))
            w.edges_preserved = false;

    w.source_edges = source.size();
    w.target_edges = target.size();
    return w;
}

auto interval_maximum(std::int64_t n) -> IntervalMaximum
{
    if (n < 2)
        throw DomainError("interval_maximum needs n >= 2, got " + std::to_string(n));

    IntervalMaximum out{ {}, {}, IntervalSpec(-(n / 2), n - n / 2), 0 };
    for (Label r = 0; n + 2 * r >= 0; --r) {
        IntervalSpec spec(r, n + r);
        auto edges = interval_graph(spec.r, spec.s).size();
        out.table.push_back({ spec, edges });
        out.max_edges = std::max(out.max_edges, edges);
    }
    for (const auto & row : out.table)
        if (row.edges == out.max_edges)
            out.maximizers.push_back(row.spec);
    return out;
}

} // namespace sumgraph
