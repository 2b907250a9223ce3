#include "sumgraph/suite.hpp"

#include "sumgraph/closed_forms.hpp"
#include "sumgraph/edge_sum.hpp"
#include "sumgraph/extremal.hpp"
#include "sumgraph/star_labeling.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <thread>

using std::size_t;
using std::string;
using std::to_string;
using std::vector;

namespace sumgraph {

namespace {

using Check = std::function<CheckResult()>;

// Collects failures; the first few become the detail line.
class Tally
{
public:
    explicit Tally(string name)
        : _name(std::move(name))
    {
    }

    auto expect(bool ok, const string & what) -> void
    {
        ++_cases;
        if (! ok && _failures++ < 3)
            _detail += (_detail.empty() ? "" : "; ") + what;
    }

    auto result() const -> CheckResult
    {
        if (_failures == 0)
            return { _name, true, to_string(_cases) + " cases" };
        return { _name, false, to_string(_failures) + " of " + to_string(_cases) + " failed: " + _detail };
    }

private:
    string _name;
    size_t _cases = 0;
    size_t _failures = 0;
    string _detail;
};

auto rs_text(Label r, Label s) -> string
{
    return "(" + to_string(r) + "," + to_string(s) + ")";
}

// Every (r, s) with r < 0 < s and -r <= s <= 12.
template <typename F>
auto for_each_rs(F && f) -> void
{
    for (Label s = 1; s <= 12; ++s)
        for (Label r = -1; -r <= s; --r)
            f(r, s);
}

auto random_label_sets(size_t count, std::uint64_t seed) -> vector<LabelSet>
{
    std::mt19937_64 rng(seed);
    vector<Label> pool(41);
    std::iota(pool.begin(), pool.end(), Label{ -20 });
    std::uniform_int_distribution<size_t> size_dist(2, 12);
    vector<LabelSet> out;
    for (size_t k = 0; k < count; ++k) {
        std::shuffle(pool.begin(), pool.end(), rng);
        out.emplace_back(vector<Label>(pool.begin(), pool.begin() + size_dist(rng)));
    }
    return out;
}

auto check_sum_rule() -> CheckResult
{
    Tally t("graph: edges are exactly the pairs with sum in S");
    for_each_rs([&](Label r, Label s) {
        auto g = interval_graph(r, s);
        size_t pairs = 0;
        for (auto u : g.labels())
            for (auto v : g.labels())
                pairs += (u < v && g.label_set().contains(u + v)) ? 1 : 0;
        bool ok = pairs == g.size();
        for (const auto & e : g.edges())
            ok = ok && e.lo < e.hi && g.label_set().contains(e.sum());
        t.expect(ok, rs_text(r, s));
    });
    return t.result();
}

auto check_join() -> CheckResult
{
    Tally t("graph: join construction equals the interval graph");
    for_each_rs([&](Label r, Label s) { t.expect(join_construct(r, s) == interval_graph(r, s), rs_text(r, s)); });
    return t.result();
}

auto check_negation_and_zero() -> CheckResult
{
    Tally t("graph: negation symmetry and universal vertex 0");
    for (const auto & labels : random_label_sets(200, 7)) {
        auto g = build_graph(labels);
        t.expect(build_graph(labels.negated()) == g.negated(), "negation");
        if (labels.contains(0))
            t.expect(g.degree(0) == g.order() - 1, "vertex 0 degree");
    }
    return t.result();
}

auto check_gn_formulas() -> CheckResult
{
    Tally t("closed forms: G_n degrees and edge count, n <= 25");
    for (Label n = 1; n <= 25; ++n) {
        auto g = build_graph(LabelSet::interval(1, n));
        Label total = 0;
        for (Label i = 1; i <= n; ++i) {
            total += degree_formula_gn(n, i);
            t.expect(degree_formula_gn(n, i) == static_cast<Label>(g.degree(i)), "deg n=" + to_string(n));
        }
        t.expect(total == 2 * edge_count_gn(n), "handshake n=" + to_string(n));
        t.expect(edge_count_gn(n) == static_cast<Label>(g.size()), "edges n=" + to_string(n));
    }
    for (Label k = 1; k <= 10; ++k) {
        vector<Label> degs;
        for (Label i = 1; i <= 2 * k; ++i)
            degs.push_back(degree_formula_gn(2 * k, i));
        std::sort(degs.begin(), degs.end(), std::greater<>{});
        vector<Label> expected;
        for (Label d = 2 * k - 2; d >= k - 1; --d)
            expected.push_back(d);
        for (Label d = k - 1; d >= 0; --d)
            expected.push_back(d);
        t.expect(degs == expected, "degree sequence k=" + to_string(k));
    }
    return t.result();
}

auto check_grs_formulas() -> CheckResult
{
    Tally t("closed forms: G_{r,s} degrees, edge counts, edge sum chromatic number");
    for_each_rs([&](Label r, Label s) {
        auto g = interval_graph(r, s);
        for (auto v : g.labels())
            t.expect(degree_formula_grs(r, s, v) == static_cast<Label>(g.degree(v)), "deg " + rs_text(r, s));
        auto m = static_cast<Label>(g.size());
        t.expect(edge_count_grs(r, s) == m, "edges " + rs_text(r, s));
        t.expect(edge_count_grs_quarter(r, s) == m, "quarter form " + rs_text(r, s));
        t.expect(edge_count_parity(r, s) == m, "parity form " + rs_text(r, s));
        t.expect(chi_sum_formula(r, s) == static_cast<Label>(edge_sum_chromatic_number(g)), "chi_sum " + rs_text(r, s));
    });
    return t.result();
}

auto check_partition() -> CheckResult
{
    Tally t("edge-sum: classes partition E into matchings, count <= |S|");
    for (const auto & labels : random_label_sets(500, 2024)) {
        auto g = build_graph(labels);
        auto p = edge_sum_classes(g);
        std::map<Edge, size_t> owner;
        bool disjoint = true, matching = true;
        for (const auto & cls : p.non_empty()) {
            std::set<Label> seen;
            for (const auto & e : cls.edges) {
                disjoint = disjoint && owner.emplace(e, 0).second;
                matching = matching && seen.insert(e.lo).second && seen.insert(e.hi).second;
                matching = matching && e.sum() == cls.sum;
            }
        }
        bool covers = owner.size() == g.size();
        for (const auto & e : g.edges())
            covers = covers && owner.contains(e);
        t.expect(disjoint && matching && covers && p.non_empty_count() <= labels.size(), "random S");
        t.expect(verify_proper(g, edge_sum_coloring(g)).valid(), "edge-sum coloring proper");
    }
    return t.result();
}

auto check_theorem_coloring() -> CheckResult
{
    Tally t("edge-coloring: |r|+s coloring of G_{r,s} is proper, 2 <= s <= 10");
    for (Label s = 2; s <= 10; ++s)
        for (Label r = -1; -r <= s; --r) {
            auto g = interval_graph(r, s);
            auto report = verify_proper(g, theorem_coloring(r, s));
            t.expect(report.valid() && report.palette_size == static_cast<size_t>(s - r), rs_text(r, s));
            t.expect(g.max_degree() == static_cast<size_t>(s - r), "Delta " + rs_text(r, s));
        }
    return t.result();
}

auto check_family_certificates() -> CheckResult
{
    Tally t("edge-coloring: G_{0,s} and G_{-1,s} certificates");
    for (Label s = 1; s <= 10; ++s) {
        auto g = interval_graph(0, s);
        auto b = chi_via_certificate(g, certificate_g0s(s));
        t.expect(b.exact && b.upper == static_cast<size_t>(s) && edge_sum_chromatic_number(g) == b.upper,
            "G_{0," + to_string(s) + "}");
    }
    for (Label s = 2; s <= 10; ++s) {
        auto g = interval_graph(-1, s);
        auto cert = certificate_g_minus1_s(s);
        auto b = chi_via_certificate(g, cert);
        t.expect(b.exact && cert.classes.size() == static_cast<size_t>(s + 1)
                && edge_sum_chromatic_number(g) == static_cast<size_t>(s + 2),
            "G_{-1," + to_string(s) + "}");
    }
    return t.result();
}

auto check_gss() -> CheckResult
{
    Tally t("edge-coloring: chi'(G_{-s,s}) = 2s for 2 <= s <= 6");
    string notes;
    for (Label s = 2; s <= 6; ++s) {
        auto ev = gss_chromatic_index(s);
        t.expect(ev.established && ev.chromatic_index == static_cast<size_t>(2 * s), "s=" + to_string(s));
        if (! ev.stored.valid())
            notes += " s=" + to_string(s) + " stored list rejected (" + ev.method + ")";
    }
    auto r = t.result();
    r.detail += notes;
    return r;
}

auto check_exact() -> CheckResult
{
    Tally t("edge-coloring: exact chromatic indices");
    auto chi = [](Label r, Label s) { return exact_chromatic_index(interval_graph(r, s)); };
    t.expect(chi(-1, 1).value == 3, "G_{-1,1}");
    for (Label s = 1; s <= 9; ++s)
        t.expect(chi(0, s).value == static_cast<size_t>(s), "G_{0," + to_string(s) + "}");
    for (Label s = 2; s <= 8; ++s)
        t.expect(chi(-1, s).value == static_cast<size_t>(s + 1), "G_{-1," + to_string(s) + "}");
    for (Label s = 2; s <= 4; ++s)
        t.expect(chi(-s, s).value == static_cast<size_t>(2 * s), "G_{-s,s} s=" + to_string(s));
    return t.result();
}

auto check_star() -> CheckResult
{
    Tally t("star: recurrence, closed form, built graph is K_{1,n-1}");
    for (std::int64_t n = 2; n <= 20; ++n)
        for (std::int64_t tt = 1; tt <= 5; ++tt)
            for (std::int64_t d = 1; d <= 5; ++d) {
                auto sl = star_labels(n, tt, d);
                auto report = verify_star(sl);
                t.expect(report.valid() && report.edge_count == static_cast<size_t>(n - 1),
                    "n=" + to_string(n) + " t=" + to_string(tt) + " d=" + to_string(d));
            }
    for (std::int64_t n = 2; n <= 12; ++n) {
        auto o = star_chi_oracle(star_labels(n, 1, 1));
        auto f = star_chi_values(n);
        t.expect(o.chromatic_index == f.chromatic_index && o.edge_sum_chromatic == f.edge_sum_chromatic,
            "chi n=" + to_string(n));
    }
    return t.result();
}

auto check_extremal() -> CheckResult
{
    Tally t("extremal: shift embedding and balanced interval maximum");
    for (Label s = 2; s <= 12; ++s)
        t.expect(shift_embedding(s).valid(), "shift s=" + to_string(s));
    for (std::int64_t n = 2; n <= 20; ++n) {
        auto m = interval_maximum(n);
        t.expect(m.balanced_is_maximum(), "n=" + to_string(n));
        // ties with (1 - n/2, 1 + n/2) exactly when 4 | n
        t.expect(m.balanced_is_unique_maximum() == (n % 4 != 0), "ties n=" + to_string(n));
    }
    return t.result();
}

} // namespace

auto gss_chromatic_index(Label s, std::uint64_t node_budget) -> GssEvidence
{
    auto graph = interval_graph(-s, s);
    auto stored = certificate_g_ss(s);
    GssEvidence ev{ s, verify_proper(graph, stored), "", 0, false };

    if (ev.stored.valid()) {
        auto b = chi_via_certificate(graph, stored);
        ev.method = "stored_certificate";
        ev.chromatic_index = b.upper;
        ev.established = b.exact;
        return ev;
    }

    if (graph.size() <= default_solver_budget) {
        auto chi = exact_chromatic_index(graph);
        ev.method = "exact_solver";
        ev.chromatic_index = chi.value;
        ev.established = true;
        return ev;
    }

    ev.method = "fresh_certificate";
    auto fresh = search_coloring(graph, graph.max_degree(), node_budget);
    if (fresh) {
        auto b = chi_via_certificate(graph, fresh->to_certificate());
        ev.chromatic_index = b.upper;
        ev.established = b.exact;
    }
    return ev;
}

auto run_invariant_suite(unsigned threads) -> vector<CheckResult>
{
    const vector<Check> checks = { check_sum_rule, check_join, check_negation_and_zero, check_gn_formulas,
        check_grs_formulas, check_partition, check_theorem_coloring, check_family_certificates, check_gss,
        check_exact, check_star, check_extremal };

    vector<CheckResult> results(checks.size());
    std::atomic<size_t> next{ 0 };
    auto worker = [&] {
        for (size_t i; (i = next++) < checks.size();) {
            try {
                results[i] = checks[i]();
            }
            catch (const std::exception & e) {
                results[i] = { "check #" + to_string(i + 1), false, string("threw: ") + e.what() };
            }
        }
    };

    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(checks.size()));
    vector<std::thread> pool;
    for (unsigned k = 1; k < threads; ++k)
        pool.emplace_back(worker);
    worker();
    for (auto & th : pool)
        th.join();
    return results;
}

} // namespace sumgraph
