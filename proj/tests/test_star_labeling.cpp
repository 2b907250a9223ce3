#include "oracle.hpp"

#include "sumgraph/edge_coloring.hpp"
#include "sumgraph/edge_sum.hpp"
#include "sumgraph/star_labeling.hpp"

#include <doctest.h>

using namespace sumgraph;

namespace {

auto big(std::initializer_list<long long> xs) -> std::vector<BigLabel>
{
    std::vector<BigLabel> out;
    for (auto x : xs)
        out.emplace_back(x);
    return out;
}

} // namespace

TEST_CASE("star_labels examples")
{
    CHECK(star_labels(4, 2, 1).labels == big({ 0, 2, 4, 8 }));
    CHECK(star_labels(2, 5, 3).labels == big({ 0, 5 }));
    CHECK(star_labels(5, 1, 2).labels == big({ 0, 1, 3, 9, 27 }));
    CHECK(star_closed_form(5, 1, 2) == big({ 0, 1, 3, 9, 27 }));
}

TEST_CASE("star_labels preconditions")
{
    CHECK_THROWS_AS(star_labels(1, 1, 1), DomainError);
    CHECK_THROWS_AS(star_labels(4, 0, 1), DomainError);
    CHECK_THROWS_AS(star_labels(4, 1, 0), DomainError);
}

TEST_CASE("recurrence equals the closed form")
{
    for (std::int64_t n = 2; n <= 20; ++n)
        for (std::int64_t t = 1; t <= 5; ++t)
            for (std::int64_t d = 1; d <= 5; ++d) {
                auto sl = star_labels(n, t, d);
                REQUIRE(sl.labels.size() == static_cast<size_t>(n));
                // independent accumulation
                BigLabel sum = 0;
                BigLabel expect = t;
                CHECK(sl.labels[0] == 0);
                for (std::int64_t i = 1; i < n; ++i) {
                    CHECK(sl.labels[i] == expect);
                    sum += sl.labels[i];
                    expect = BigLabel(d) * sum + t;
                }
                CHECK(verify_star(sl).valid());
            }
}

TEST_CASE("verify_star")
{
    auto sl = star_labels(4, 2, 1);
    auto rep = verify_star(sl);
    CHECK(rep.valid());
    CHECK(rep.edge_count == 3);
    CHECK(oracle::edges({ 0, 2, 4, 8 }) == std::set<oracle::Pair>{ { 0, 2 }, { 0, 4 }, { 0, 8 } });

    auto pow2 = star_labels(10, 1, 1);
    CHECK(pow2.labels.back() == 256);
    CHECK(verify_star(pow2).valid());
    CHECK(verify_star(pow2).edge_count == 9);

    auto tampered = sl;
    tampered.labels = big({ 0, 2, 4, 6 });
    auto bad = verify_star(tampered);
    CHECK_FALSE(bad.valid());
    CHECK_FALSE(bad.no_leaf_edges);
    CHECK(oracle::edges({ 0, 2, 4, 6 }).count({ 2, 4 }) == 1);

    auto dup = sl;
    dup.labels = big({ 0, 2, 2, 8 });
    CHECK_FALSE(verify_star(dup).distinct);

    auto shifted = sl;
    shifted.labels = big({ 1, 2, 4, 8 });
    CHECK_FALSE(verify_star(shifted).center_is_zero);

    auto unordered = sl;
    unordered.labels = big({ 0, 4, 2, 8 });
    CHECK_FALSE(verify_star(unordered).strictly_increasing);
}

TEST_CASE("big labels at n = 20, d = 5")
{
    auto sl = star_labels(20, 5, 5);
    BigLabel expect = 5;
    for (int i = 0; i < 18; ++i)
        expect *= 6;
    CHECK(sl.labels.back() == expect);
    CHECK(verify_star(sl).valid());
    CHECK(machine_labels(star_labels(20, 1, 1)).size() == 20);

    auto huge = star_labels(40, 5, 5);
    CHECK(huge.labels.back() > BigLabel(std::numeric_limits<std::int64_t>::max()));
    CHECK(verify_star(huge).valid());
    CHECK_THROWS_AS(machine_labels(huge), OverflowError);
}

TEST_CASE("star chromatic values")
{
    CHECK(star_chi_values(2).chromatic_index == 1);
    CHECK(star_chi_values(5).edge_sum_chromatic == 4);

    auto pow2 = star_chi_oracle(star_labels(10, 1, 1));
    CHECK(pow2.edge_sum_chromatic == 9);

    for (std::int64_t n = 2; n <= 12; ++n) {
        auto sl = star_labels(n, 2, 3);
        auto g = build_graph(machine_labels(sl));
        auto expected = star_chi_values(n);
        CHECK(expected.chromatic_index == static_cast<size_t>(n - 1));
        CHECK(expected.edge_sum_chromatic == static_cast<size_t>(n - 1));
        CHECK(edge_sum_chromatic_number(g) == static_cast<size_t>(n - 1));
        CHECK(exact_chromatic_index(g).value == static_cast<size_t>(n - 1));
        auto got = star_chi_oracle(sl);
        CHECK(got.chromatic_index == expected.chromatic_index);
        CHECK(got.edge_sum_chromatic == expected.edge_sum_chromatic);
    }
}
