#pragma once

#include "sumgraph/graph.hpp"

#include <cstdint>

namespace sumgraph {

/// Interval [r, s] with r <= 0 <= s and r + s >= 0.
struct IntervalSpec
{
    Label r;
    Label s;

    /// Throws DomainError / ConventionError when the bounds are not admissible.
    IntervalSpec(Label r, Label s);

    auto order() const -> Label { return s - r + 1; }

    friend auto operator==(const IntervalSpec &, const IntervalSpec &) -> bool = default;
};

/// Degree of label i in G_n = G+([1, n]).
auto degree_formula_gn(std::int64_t n, std::int64_t i) -> std::int64_t;

/// Degree of label i in G_{r,s}, r < 0 < s, five-case form.
auto degree_formula_grs(std::int64_t r, std::int64_t s, std::int64_t i) -> std::int64_t;

/// ||G_n|| = floor((n-1)^2 / 4).
auto edge_count_gn(std::int64_t n) -> std::int64_t;

/// ||G_{r,s}|| = -rs - r + s + floor((r+1)^2/4) + floor((s-1)^2/4).
auto edge_count_grs(std::int64_t r, std::int64_t s) -> std::int64_t;

/// The same count through (r^2 + s^2 - 3r + 3s - 4rs)/4 - (floor(-r/2) + floor(s/2))/2,
/// evaluated exactly; throws ConsistencyError if the quarter form is not integral.
auto edge_count_grs_quarter(std::int64_t r, std::int64_t s) -> std::int64_t;

/// Which of the four odd/even branches applies: r = -(2a+1) or -2a, s = 2b+1 or 2b.
struct ParityCase
{
    bool r_odd;
    bool s_odd;
    std::int64_t a;
    std::int64_t b;
};

auto parity_case(std::int64_t r, std::int64_t s) -> ParityCase;

/// ||G_{r,s}|| through the four-branch parity form.
auto edge_count_parity(std::int64_t r, std::int64_t s) -> std::int64_t;

/// Edge sum chromatic number of G_{r,s}: |r| + s + 1.
auto chi_sum_formula(std::int64_t r, std::int64_t s) -> std::int64_t;

} // namespace sumgraph
