#pragma once

#include "sumgraph/errors.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <tuple>
#include <type_traits>
#include <utility>
#include <vector>

namespace sumgraph {

using Label = std::int64_t;

namespace detail {

template <typename L>
auto checked_sum(const L & a, const L & b) -> std::optional<L>
{
    if constexpr (std::is_integral_v<L>) {
        L out;
        if (__builtin_add_overflow(a, b, &out))
            return std::nullopt;
        return out;
    }
    else
        return L(a + b);
}

template <typename L>
auto to_text(const L & v) -> std::string
{
    std::ostringstream s;
    s << v;
    return s.str();
}

} // namespace detail

/// Unordered pair of distinct labels, stored with `lo < hi`.
template <typename L>
struct BasicEdge
{
    L lo;
    L hi;

    BasicEdge() = default;
    BasicEdge(L a, L b)
        : lo(std::move(a))
        , hi(std::move(b))
    {
        if (hi < lo)
            std::swap(lo, hi);
    }

    auto sum() const -> L { return L(lo + hi); }
    auto touches(const L & v) const -> bool { return lo == v || hi == v; }

    friend auto operator==(const BasicEdge & a, const BasicEdge & b) -> bool
    {
        return a.lo == b.lo && a.hi == b.hi;
    }
    friend auto operator<(const BasicEdge & a, const BasicEdge & b) -> bool
    {
        return std::tie(a.lo, a.hi) < std::tie(b.lo, b.hi);
    }
};

/// Finite set of distinct integer labels in ascending order.
template <typename L>
class BasicLabelSet
{
public:
    BasicLabelSet() = default;

    explicit BasicLabelSet(std::vector<L> labels)
        : _labels(std::move(labels))
    {
        std::sort(_labels.begin(), _labels.end());
        auto dup = std::adjacent_find(_labels.begin(), _labels.end());
        if (dup != _labels.end())
            throw ValidationError("duplicate label " + detail::to_text(*dup));
    }

    /// The integer interval [lo, hi].
    static auto interval(L lo, L hi) -> BasicLabelSet
    {
        BasicLabelSet out;
        for (L v = lo; v <= hi; ++v)
            out._labels.push_back(v);
        return out;
    }

    auto labels() const -> std::span<const L> { return _labels; }
    auto size() const -> std::size_t { return _labels.size(); }
    auto empty() const -> bool { return _labels.empty(); }

    auto contains(const L & v) const -> bool
    {
        return std::binary_search(_labels.begin(), _labels.end(), v);
    }

    auto index_of(const L & v) const -> std::optional<std::size_t>
    {
        auto it = std::lower_bound(_labels.begin(), _labels.end(), v);
        if (it == _labels.end() || *it != v)
            return std::nullopt;
        return static_cast<std::size_t>(it - _labels.begin());
    }

    auto negated() const -> BasicLabelSet
    {
        std::vector<L> out;
        out.reserve(_labels.size());
        for (const auto & v : _labels)
            out.push_back(L(-v));
        return BasicLabelSet(std::move(out));
    }

    friend auto operator==(const BasicLabelSet &, const BasicLabelSet &) -> bool = default;

private:
    std::vector<L> _labels;
};

/// G+(S): vertices are the labels of S, {u,v} is an edge iff u != v and
/// u + v is in S. Edges are kept in (lo, hi) lexicographic order.
template <typename L>
class BasicSumGraph
{
public:
    using Edge = BasicEdge<L>;
    using LabelSetType = BasicLabelSet<L>;

    static auto build(LabelSetType labels) -> BasicSumGraph
    {
        if (labels.empty())
            throw ValidationError("label set must be non-empty");

        std::vector<Edge> edges;
        auto ls = labels.labels();
        for (std::size_t i = 0; i < ls.size(); ++i)
            for (std::size_t j = i + 1; j < ls.size(); ++j) {
                auto s = detail::checked_sum(ls[i], ls[j]);
                if (s && labels.contains(*s))
                    edges.emplace_back(ls[i], ls[j]);
            }

        return BasicSumGraph(std::move(labels), std::move(edges));
    }

    /// Graph with an explicitly given edge list. Endpoints must be labels,
    /// no loops, no repeats; the sum rule is *not* enforced, see
    /// `satisfies_sum_rule()`.
    static auto assemble(LabelSetType labels, std::vector<Edge> edges) -> BasicSumGraph
    {
        if (labels.empty())
            throw ValidationError("label set must be non-empty");
        for (const auto & e : edges) {
            if (e.lo == e.hi)
                throw ValidationError("self-loop at " + detail::to_text(e.lo));
            if (! labels.contains(e.lo) || ! labels.contains(e.hi))
                throw ValidationError("edge endpoint outside label set");
        }
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
            throw ValidationError("repeated edge");
        return BasicSumGraph(std::move(labels), std::move(edges));
    }

    auto label_set() const -> const LabelSetType & { return _labels; }
    auto labels() const -> std::span<const L> { return _labels.labels(); }
    auto edges() const -> std::span<const Edge> { return _edges; }
    auto order() const -> std::size_t { return _labels.size(); }
    auto size() const -> std::size_t { return _edges.size(); }

    auto index_of(const L & v) const -> std::size_t
    {
        auto i = _labels.index_of(v);
        if (! i)
            throw LookupError("label " + detail::to_text(v) + " is not a vertex");
        return *i;
    }

    auto degree(const L & v) const -> std::size_t { return _degrees[index_of(v)]; }

    /// Degrees aligned with `labels()`.
    auto degrees() const -> std::span<const std::size_t> { return _degrees; }

    auto max_degree() const -> std::size_t
    {
        return _degrees.empty() ? 0 : *std::max_element(_degrees.begin(), _degrees.end());
    }

    auto has_edge(const L & a, const L & b) const -> bool
    {
        if (a == b)
            return false;
        return std::binary_search(_edges.begin(), _edges.end(), Edge(a, b));
    }

    auto satisfies_sum_rule() const -> bool
    {
        auto rebuilt = build(_labels);
        return rebuilt._edges == _edges;
    }

    /// Same graph with every label replaced by its negative.
    auto negated() const -> BasicSumGraph
    {
        std::vector<Edge> edges;
        edges.reserve(_edges.size());
        for (const auto & e : _edges)
            edges.emplace_back(L(-e.lo), L(-e.hi));
        return assemble(_labels.negated(), std::move(edges));
    }

    friend auto operator==(const BasicSumGraph & a, const BasicSumGraph & b) -> bool
    {
        return a._labels == b._labels && a._edges == b._edges;
    }

private:
    BasicSumGraph(LabelSetType labels, std::vector<Edge> edges)
        : _labels(std::move(labels))
        , _edges(std::move(edges))
        , _degrees(_labels.size(), 0)
    {
        for (const auto & e : _edges) {
            ++_degrees[*_labels.index_of(e.lo)];
            ++_degrees[*_labels.index_of(e.hi)];
        }
    }

    LabelSetType _labels;
    std::vector<Edge> _edges;
    std::vector<std::size_t> _degrees;
};

using Edge = BasicEdge<Label>;
using LabelSet = BasicLabelSet<Label>;
using IntegralSumGraph = BasicSumGraph<Label>;

auto build_graph(const LabelSet & labels) -> IntegralSumGraph;

/// G_{r,s} = G+([r, s]). Requires r <= 0 <= s and r + s >= 0.
auto interval_graph(Label r, Label s) -> IntegralSumGraph;

/// G_{r,s} assembled as the join K_1 * G+([r,-1]) * G+([1,s]).
auto join_construct(Label r, Label s) -> IntegralSumGraph;

auto degree(const IntegralSumGraph & graph, Label v) -> std::size_t;

} // namespace sumgraph
