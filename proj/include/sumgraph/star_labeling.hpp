#pragma once

#include "sumgraph/graph.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace sumgraph {

using BigLabel = boost::multiprecision::cpp_int;
using BigSumGraph = BasicSumGraph<BigLabel>;

/// Integral sum labeling of the star K_{1,n-1}: the center is 0, the first
/// leaf is t, and each further leaf is d * (sum of earlier leaves) + t,
/// which works out to t (d+1)^{i-1}.
struct StarLabeling
{
    std::int64_t n;
    std::int64_t t;
    std::int64_t d;
    /// [center, leaf 1, ..., leaf n-1]
    std::vector<BigLabel> labels;
};

/// Labels from the recurrence; checked against the closed form.
/// Throws DomainError unless n >= 2, t >= 1, d >= 1.
auto star_labels(std::int64_t n, std::int64_t t, std::int64_t d) -> StarLabeling;

/// [0, t, t(d+1), ..., t(d+1)^{n-2}]
auto star_closed_form(std::int64_t n, std::int64_t t, std::int64_t d) -> std::vector<BigLabel>;

struct StarReport
{
    bool distinct = true;
    bool center_is_zero = true;
    bool strictly_increasing = true;
    bool center_adjacent_to_all = true;
    bool no_leaf_edges = true;
    std::size_t edge_count = 0;
    std::vector<std::string> issues;

    auto valid() const -> bool
    {
        return distinct && center_is_zero && strictly_increasing && center_adjacent_to_all && no_leaf_edges;
    }
};

/// Builds G+(labels) and checks it is exactly the star centered at label 0.
auto verify_star(const StarLabeling & labeling) -> StarReport;

/// The labels as machine integers. Throws OverflowError if one does not fit.
auto machine_labels(const StarLabeling & labeling) -> LabelSet;

struct StarChi
{
    std::size_t chromatic_index;
    std::size_t edge_sum_chromatic;
};

/// (n-1, n-1).
auto star_chi_values(std::int64_t n) -> StarChi;

/// Both values computed on the built graph: exact solver and edge-sum class count.
auto star_chi_oracle(const StarLabeling & labeling) -> StarChi;

} // namespace sumgraph
