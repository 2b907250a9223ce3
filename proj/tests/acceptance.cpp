// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include "oracle.hpp"

#include "sumgraph/closed_forms.hpp"
#include "sumgraph/edge_coloring.hpp"
#include "sumgraph/edge_sum.hpp"
#include "sumgraph/extremal.hpp"
#include "sumgraph/io.hpp"
#include "sumgraph/star_labeling.hpp"
#include "sumgraph/suite.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace sumgraph;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome
{
    bool passed = true;
    std::ostringstream notes;

    auto expect(bool cond, const std::string & what) -> void
    {
        if (! cond) {
            if (passed)
                notes << what;
            passed = false;
        }
    }
};

auto seconds_since(Clock::time_point t0) -> double
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

auto pairs_of(const std::vector<Edge> & es) -> std::set<oracle::Pair>
{
    std::set<oracle::Pair> out;
    for (const auto & e : es)
        out.insert({ e.lo, e.hi });
    return out;
}

auto tag(Label r, Label s) -> std::string
{
    return "(" + std::to_string(r) + "," + std::to_string(s) + ")";
}

auto formulas_match_oracle(Outcome & o) -> void
{
    auto t0 = Clock::now();
    for (Label s = 1; s <= 12; ++s)
        for (Label r = -1; -r <= s; --r) {
            auto labels = oracle::range(r, s);
            auto es = oracle::edges(labels);
            auto m = static_cast<std::int64_t>(es.size());
            o.expect(edge_count_grs(r, s) == m && edge_count_parity(r, s) == m, "edge count " + tag(r, s));
            for (auto v : labels)
                o.expect(degree_formula_grs(r, s, v) == oracle::degree(es, v), "degree in " + tag(r, s));
        }
    for (std::int64_t n = 1; n <= 12; ++n) {
        auto es = oracle::edges(oracle::range(1, n));
        for (std::int64_t i = 1; i <= n; ++i)
            o.expect(degree_formula_gn(n, i) == oracle::degree(es, i), "degree in G_" + std::to_string(n));
    }
    auto t = seconds_since(t0);
    o.expect(t < 1.0, "took too long");
    o.notes << (o.passed ? "" : "; ") << "time " << t << " s";
}

auto partition_suite(Outcome & o) -> void
{
    std::mt19937_64 rng(500);
    std::uniform_int_distribution<Label> val(-20, 20);
    std::uniform_int_distribution<size_t> size(2, 12);
    int failures = 0;
    for (int round = 0; round < 500; ++round) {
        std::set<Label> s;
        auto want = size(rng);
        while (s.size() < want)
            s.insert(val(rng));
        std::vector<Label> labels(s.begin(), s.end());
        auto g = build_graph(LabelSet(labels));
        auto p = edge_sum_classes(g);

        bool ok = p.non_empty_count() <= labels.size();
        std::set<oracle::Pair> seen;
        for (const auto & cls : p.non_empty()) {
            std::set<Label> touched;
            for (const auto & e : cls.edges) {
                ok = ok && seen.insert({ e.lo, e.hi }).second;
                ok = ok && touched.insert(e.lo).second && touched.insert(e.hi).second;
            }
        }
        ok = ok && seen == oracle::edges(labels);
        failures += ok ? 0 : 1;
    }
    o.expect(failures == 0, std::to_string(failures) + " failing sets");
    o.notes << (o.passed ? "500 sets" : "");
}

auto chi_sum_identity(Outcome & o) -> void
{
    for (Label s = 1; s <= 12; ++s)
        for (Label r = -1; -r <= s; --r)
            o.expect(chi_sum_formula(r, s) == static_cast<std::int64_t>(oracle::classes(oracle::range(r, s)).size()),
                "mismatch at " + tag(r, s));
}

auto theorem_reproduction(Outcome & o) -> void
{
    auto t0 = Clock::now();
    for (Label s = 2; s <= 10; ++s)
        for (Label r = -1; -r <= s; --r) {
            auto c = theorem_coloring(r, s);
            auto rep = verify_proper(interval_graph(r, s), c);
            o.expect(rep.valid() && static_cast<Label>(rep.palette_size) == -r + s, "coloring " + tag(r, s));
        }
    for (auto [r, s, file] : { std::tuple{ -4, 7, "golden/fig6_g_-4_7.json" }, std::tuple{ -5, 7, "golden/fig7_g_-5_7.json" } }) {
        auto golden = io::coloring_from_json(io::Json::parse(oracle::read_file(oracle::data_path(file))));
        o.expect(golden == theorem_coloring(r, s), std::string("figure mismatch ") + file);
    }
    auto t = seconds_since(t0);
    o.expect(t < 5.0, "took too long");
    o.notes << (o.passed ? "" : "; ") << "time " << t << " s";
}

auto exact_indices(Outcome & o) -> void
{
    double worst = 0;
    auto timed = [&](Label r, Label s, size_t want) {
        auto t0 = Clock::now();
        auto got = exact_chromatic_index(interval_graph(r, s)).value;
        auto t = seconds_since(t0);
        worst = std::max(worst, t);
        o.expect(got == want && t < 60.0, "chi' " + tag(r, s));
    };
    timed(-1, 1, 3);
    for (Label s = 1; s <= 9; ++s)
        timed(0, s, s);
    for (Label s = 2; s <= 8; ++s)
        timed(-1, s, s + 1);
    for (Label s = 2; s <= 4; ++s)
        timed(-s, s, 2 * s);
    for (Label s : { 5, 6 }) {
        auto t0 = Clock::now();
        auto ev = gss_chromatic_index(s);
        auto t = seconds_since(t0);
        worst = std::max(worst, t);
        o.expect(ev.established && ev.chromatic_index == static_cast<size_t>(2 * s) && t < 60.0, "G_{-s,s} " + tag(-s, s));
        o.notes << "s=" << s << " via " << ev.method << "; ";
    }
    o.notes << "slowest " << worst << " s";
}

auto separation(Outcome & o) -> void
{
    for (Label s = 2; s <= 8; ++s) {
        auto g = interval_graph(-1, s);
        auto chi = exact_chromatic_index(g).value;
        auto sum = edge_sum_chromatic_number(g);
        o.expect(chi == static_cast<size_t>(s + 1) && sum == static_cast<size_t>(s + 2) && chi != sum, "G_{-1,s} " + tag(-1, s));
        o.expect(sum == oracle::classes(oracle::range(-1, s)).size(), "oracle class count " + tag(-1, s));
    }
    for (Label s = 1; s <= 9; ++s) {
        auto g = interval_graph(0, s);
        o.expect(exact_chromatic_index(g).value == static_cast<size_t>(s) && edge_sum_chromatic_number(g) == static_cast<size_t>(s),
            "G_{0,s} " + tag(0, s));
    }
    for (std::int64_t n = 2; n <= 12; ++n) {
        auto expected = star_chi_values(n);
        auto got = star_chi_oracle(star_labels(n, 1, 1));
        o.expect(expected.chromatic_index == static_cast<size_t>(n - 1) && expected.edge_sum_chromatic == static_cast<size_t>(n - 1)
                && got.chromatic_index == expected.chromatic_index && got.edge_sum_chromatic == expected.edge_sum_chromatic,
            "star n=" + std::to_string(n));
    }
}

auto golden_g_minus1_5(Outcome & o) -> void
{
    auto g = interval_graph(-1, 5);

    auto classes = io::dump(io::classes_to_json(edge_sum_classes(g))) + "\n";
    o.expect(classes == oracle::read_file(oracle::data_path("golden/g_-1_5_classes.json")), "class JSON differs");
    o.expect(edge_sum_chromatic_number(g) == 7, "not seven classes");

    auto stored = stored_certificate("g_minus1_5_example");
    auto from_data = EdgeColoring::from_certificate(stored.certificate);
    auto six = io::dump(io::coloring_to_json(from_data)) + "\n";
    o.expect(six == oracle::read_file(oracle::data_path("golden/g_-1_5_six_class_coloring.json")), "six-class JSON differs");

    auto rep = verify_proper(g, stored.certificate);
    o.expect(rep.valid() && rep.palette_size == 6, "six-class certificate fails verification");

    auto generated = certificate_g_minus1_s(5);
    o.expect(generated.classes.size() == stored.certificate.classes.size(), "generated certificate size");
    for (size_t k = 0; k < generated.classes.size() && k < stored.certificate.classes.size(); ++k)
        o.expect(pairs_of(generated.classes[k]) == pairs_of(stored.certificate.classes[k]), "generated class differs");
}

auto star_suite(Outcome & o) -> void
{
    for (std::int64_t n = 2; n <= 20; ++n)
        for (std::int64_t t = 1; t <= 5; ++t)
            for (std::int64_t d = 1; d <= 5; ++d) {
                auto sl = star_labels(n, t, d);
                BigLabel term = t;
                bool ok = sl.labels.size() == static_cast<size_t>(n) && sl.labels[0] == 0;
                for (std::int64_t i = 1; i < n && ok; ++i) {
                    ok = sl.labels[i] == term;
                    term *= d + 1;
                }
                auto rep = verify_star(sl);
                ok = ok && rep.valid() && rep.edge_count == static_cast<size_t>(n - 1);
                o.expect(ok, "n=" + std::to_string(n) + " t=" + std::to_string(t) + " d=" + std::to_string(d));
            }
    auto top = star_labels(20, 5, 5).labels.back();
    o.notes << (o.passed ? "" : "; ") << "largest label " << top.str();
}

auto extremal_suite(Outcome & o) -> void
{
    std::vector<std::int64_t> tied;
    for (Label s = 2; s <= 12; ++s) {
        auto w = shift_embedding(s);
        auto source = oracle::edges(oracle::range(0, s));
        auto target = oracle::edges(oracle::range(-1, s - 1));
        bool maps = true;
        for (auto [u, v] : source)
            maps = maps && target.count({ w.vertex_map.at(u), w.vertex_map.at(v) }) == 1;
        o.expect(w.valid() && maps && target.size() > source.size(), "shift s=" + std::to_string(s));
    }
    for (std::int64_t n = 2; n <= 20; ++n) {
        auto m = interval_maximum(n);
        size_t best = 0;
        for (std::int64_t r = 0; n + 2 * r >= 0; --r)
            best = std::max(best, oracle::edges(oracle::range(r, r + n)).size());
        auto balanced = oracle::edges(oracle::range(-(n / 2), n - n / 2)).size();
        o.expect(balanced == best && m.max_edges == best && m.best() == IntervalSpec(-(n / 2), n - n / 2),
            "order " + std::to_string(n + 1));
        if (! m.balanced_is_unique_maximum())
            tied.push_back(n + 1);
    }
    o.notes << (o.passed ? "" : "; ") << "balanced split ties at orders";
    for (auto order : tied)
        o.notes << " " << order;
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<void(Outcome &)>>> criteria = {
        { "formula-oracle equivalence", formulas_match_oracle },
        { "partition and matching suite", partition_suite },
        { "edge sum chromatic number identity", chi_sum_identity },
        { "constructive coloring reproduction", theorem_reproduction },
        { "exact chromatic indices", exact_indices },
        { "separation claims", separation },
        { "G_{-1,5} golden test", golden_g_minus1_5 },
        { "star suite", star_suite },
        { "extremal suite", extremal_suite },
    };

    int failed = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            criteria[i].second(o);
        }
        catch (const std::exception & e) {
            o.passed = false;
            o.notes << "exception: " << e.what();
        }
        failed += o.passed ? 0 : 1;
        std::cout << (o.passed ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].first;
        auto notes = o.notes.str();
        if (! notes.empty())
            std::cout << "  [" << notes << "]";
        std::cout << "\n";
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
