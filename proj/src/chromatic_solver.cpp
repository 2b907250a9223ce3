#include "sumgraph/edge_coloring.hpp"

#include <string>
#include <vector>

using std::size_t;
using std::uint64_t;
using std::vector;

namespace sumgraph {

namespace {

/// Proper k-edge-coloring by depth-first search. Edges are taken in the
/// graph's canonical order and colors ascending; a fresh color may only be
/// one past the largest used so far (colors are interchangeable), and a
/// branch is cut as soon as some uncolored neighbouring edge has no color
/// left.
class EdgeColoringSearch
{
public:
    EdgeColoringSearch(const IntegralSumGraph & graph, size_t colors, uint64_t node_budget)
        : _k(colors)
        , _budget(node_budget)
        , _used(graph.order() * colors, 0)
        , _incident(graph.order())
    {
        for (const auto & e : graph.edges()) {
            auto a = graph.index_of(e.lo), b = graph.index_of(e.hi);
            _incident[a].push_back(_ends.size());
            _incident[b].push_back(_ends.size());
            _ends.push_back({ a, b });
        }
        _color.assign(_ends.size(), -1);
    }

    /// nullopt when exhausted; throws ResourceError when over budget.
    auto run() -> std::optional<vector<int>>
    {
        if (_ends.empty())
            return vector<int>{};
        if (_k == 0)
            return std::nullopt;
        if (extend(0, -1))
            return _color;
        return std::nullopt;
    }

    auto nodes() const -> uint64_t { return _nodes; }

private:
    struct Ends
    {
        size_t a, b;
    };

    auto used(size_t v, size_t c) -> char & { return _used[v * _k + c]; }

    auto has_free_color(size_t edge) -> bool
    {
        auto [a, b] = _ends[edge];
        for (size_t c = 0; c < _k; ++c)
            if (! used(a, c) && ! used(b, c))
                return true;
        return false;
    }

    auto neighbours_feasible(size_t edge) -> bool
    {
        auto [a, b] = _ends[edge];
        for (auto v : { a, b })
            for (auto f : _incident[v])
                if (_color[f] < 0 && ! has_free_color(f))
                    return false;
        return true;
    }

    auto extend(size_t edge, int max_used) -> bool
    {
        if (edge == _ends.size())
            return true;
        if (++_nodes > _budget)
            throw ResourceError("edge coloring search exceeded " + std::to_string(_budget) + " nodes");

        auto [a, b] = _ends[edge];
        auto limit = std::min<size_t>(_k, static_cast<size_t>(max_used + 2));
        for (size_t c = 0; c < limit; ++c) {
            if (used(a, c) || used(b, c))
                continue;
            used(a, c) = used(b, c) = 1;
            _color[edge] = static_cast<int>(c);
            if (neighbours_feasible(edge) && extend(edge + 1, std::max(max_used, static_cast<int>(c))))
                return true;
            _color[edge] = -1;
            used(a, c) = used(b, c) = 0;
        }
        return false;
    }

    size_t _k;
    uint64_t _budget;
    uint64_t _nodes = 0;
    vector<char> _used;
    vector<vector<size_t>> _incident;
    vector<Ends> _ends;
    vector<int> _color;
};

auto to_coloring(const IntegralSumGraph & graph, const vector<int> & colors) -> EdgeColoring
{
    EdgeColoring out;
    auto edges = graph.edges();
    for (size_t i = 0; i < edges.size(); ++i)
        out.assign(edges[i], colors[i] + 1);
    return out;
}

} // namespace

auto exact_chromatic_index(const IntegralSumGraph & graph, size_t edge_budget) -> ChromaticIndex
{
    if (graph.size() > edge_budget)
        throw ResourceError("graph has " + std::to_string(graph.size()) + " edges, solver budget is "
            + std::to_string(edge_budget));

    auto delta = graph.max_degree();
    EdgeColoringSearch search(graph, delta, UINT64_MAX);
    auto found = search.run();
    if (found)
        return { delta, delta, to_coloring(graph, *found), search.nodes() };
    return { delta + 1, delta, std::nullopt, search.nodes() };
}

auto search_coloring(const IntegralSumGraph & graph, size_t colors, uint64_t node_budget)
    -> std::optional<EdgeColoring>
{
    EdgeColoringSearch search(graph, colors, node_budget);
    auto found = search.run();
    if (! found)
        return std::nullopt;
    return to_coloring(graph, *found);
}

} // namespace sumgraph
