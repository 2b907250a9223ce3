#include "sumgraph/closed_forms.hpp"

#include <string>

using std::int64_t;
using std::to_string;

namespace sumgraph {

namespace {

// Floors of non-negative quotients only; callers square or negate first.
auto floor_div(int64_t num, int64_t den) -> int64_t
{
    if (num < 0 || den <= 0)
        throw ConsistencyError("floor_div on negative operand");
    return num / den;
}

auto require_rs(int64_t r, int64_t s) -> void
{
    if (! (r < 0 && 0 < s))
        throw DomainError("need r < 0 < s, got r = " + to_string(r) + ", s = " + to_string(s));
}

} // namespace

IntervalSpec::IntervalSpec(Label r_, Label s_)
    : r(r_)
    , s(s_)
{
    if (r > 0 || s < 0)
        throw DomainError("need r <= 0 <= s, got [" + to_string(r) + ", " + to_string(s) + "]");
    if (r + s < 0)
        throw ConventionError("[" + to_string(r) + ", " + to_string(s) + "] violates r + s >= 0");
}

auto degree_formula_gn(int64_t n, int64_t i) -> int64_t
{
    if (n < 1 || i < 1 || i > n)
        throw DomainError("need 1 <= i <= n, got n = " + to_string(n) + ", i = " + to_string(i));
    return i <= floor_div(n, 2) ? n - i - 1 : n - i;
}

auto degree_formula_grs(int64_t r, int64_t s, int64_t i) -> int64_t
{
    require_rs(r, s);
    if (i < r || i > s)
        throw DomainError("label " + to_string(i) + " outside [" + to_string(r) + ", " + to_string(s) + "]");

    auto n = s - r + 1;
    if (i == 0)
        return n - 1;
    if (i > 0)
        return i <= floor_div(s, 2) ? n - i - 1 : n - i;
    return -i <= floor_div(-r, 2) ? n + i - 1 : n + i;
}

auto edge_count_gn(int64_t n) -> int64_t
{
    if (n < 1)
        throw DomainError("need n >= 1, got " + to_string(n));
    return floor_div((n - 1) * (n - 1), 4);
}

auto edge_count_grs(int64_t r, int64_t s) -> int64_t
{
    require_rs(r, s);
    return -r * s - r + s + floor_div((r + 1) * (r + 1), 4) + floor_div((s - 1) * (s - 1), 4);
}

auto edge_count_grs_quarter(int64_t r, int64_t s) -> int64_t
{
    require_rs(r, s);
    auto four_m = r * r + s * s - 3 * r + 3 * s - 4 * r * s - 2 * (floor_div(-r, 2) + floor_div(s, 2));
    if (four_m % 4 != 0)
        throw ConsistencyError("quarter form not integral at r = " + to_string(r) + ", s = " + to_string(s));
    return four_m / 4;
}

auto parity_case(int64_t r, int64_t s) -> ParityCase
{
    require_rs(r, s);
    ParityCase p;
    p.r_odd = (-r) % 2 == 1;
    p.s_odd = s % 2 == 1;
    p.a = p.r_odd ? (-r - 1) / 2 : -r / 2;
    p.b = p.s_odd ? (s - 1) / 2 : s / 2;
    return p;
}

auto edge_count_parity(int64_t r, int64_t s) -> int64_t
{
    auto [r_odd, s_odd, a, b] = parity_case(r, s);
    auto base = a * a + b * b + 4 * a * b;
    if (r_odd && s_odd)
        return base + 4 * a + 4 * b + 3;
    if (r_odd)
        return base + 2 * a + 3 * b + 1;
    if (s_odd)
        return base + 3 * a + 2 * b + 1;
    return base + a + b;
}

auto chi_sum_formula(int64_t r, int64_t s) -> int64_t
{
    require_rs(r, s);
    return -r + s + 1;
}

} // namespace sumgraph
