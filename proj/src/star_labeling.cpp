#include "sumgraph/star_labeling.hpp"
#include "sumgraph/edge_coloring.hpp"
#include "sumgraph/edge_sum.hpp"

#include <limits>
#include <string>

using std::int64_t;
using std::size_t;
using std::string;
using std::to_string;
using std::vector;

namespace sumgraph {

namespace {

auto require_params(int64_t n, int64_t t, int64_t d) -> void
{
    if (n < 2)
        throw DomainError("star order n must be >= 2, got " + to_string(n));
    if (t < 1 || d < 1)
        throw DomainError("star seed t and multiplier d must be >= 1, got t = " + to_string(t) + ", d = "
            + to_string(d));
}

auto text(const BigLabel & v) -> string
{
    return v.str();
}

} // namespace

auto star_closed_form(int64_t n, int64_t t, int64_t d) -> vector<BigLabel>
{
    require_params(n, t, d);
    vector<BigLabel> out{ 0 };
    BigLabel ratio = d + 1;
    for (int64_t i = 1; i <= n - 1; ++i)
        out.push_back(BigLabel(t) * boost::multiprecision::pow(ratio, static_cast<unsigned>(i - 1)));
    return out;
}

auto star_labels(int64_t n, int64_t t, int64_t d) -> StarLabeling
{
    require_params(n, t, d);

    StarLabeling out{ n, t, d, { BigLabel(0), BigLabel(t) } };
    BigLabel leaf_sum = t;
    for (int64_t i = 2; i <= n - 1; ++i) {
        BigLabel next = BigLabel(d) * leaf_sum + t;
        leaf_sum += next;
        out.labels.push_back(std::move(next));
    }

    if (out.labels != star_closed_form(n, t, d))
        throw ConsistencyError("star recurrence disagrees with t(d+1)^(i-1)");
    return out;
}

auto verify_star(const StarLabeling & labeling) -> StarReport
{
    StarReport report;
    const auto & ls = labeling.labels;

    if (ls.empty() || ls.front() != 0) {
        report.center_is_zero = false;
        report.issues.push_back("first label is not 0");
    }
    for (size_t i = 1; i < ls.size(); ++i)
        if (! (ls[i - 1] < ls[i])) {
            report.strictly_increasing = false;
            report.issues.push_back("labels not strictly increasing at position " + to_string(i));
        }

    BigSumGraph graph = [&] {
        try {
            return BigSumGraph::build(BasicLabelSet<BigLabel>(ls));
        }
        catch (const ValidationError & e) {
            report.distinct = false;
            report.issues.push_back(e.what());
            return BigSumGraph::build(BasicLabelSet<BigLabel>(vector<BigLabel>{ 0 }));
        }
    }();
    if (! report.distinct)
        return report;

    report.edge_count = graph.size();
    const BigLabel center = 0;
    for (const auto & e : graph.edges())
        if (! e.touches(center)) {
            report.no_leaf_edges = false;
            report.issues.push_back("leaf-leaf edge {" + text(e.lo) + "," + text(e.hi) + "}, sum " + text(e.sum()));
        }

    if (! graph.label_set().contains(center)) {
        report.center_adjacent_to_all = false;
        report.issues.push_back("no vertex labeled 0");
    }
    else
        for (const auto & v : graph.labels())
            if (v != center && ! graph.has_edge(center, v)) {
                report.center_adjacent_to_all = false;
                report.issues.push_back("center not adjacent to " + text(v));
            }

    return report;
}

auto machine_labels(const StarLabeling & labeling) -> LabelSet
{
    vector<Label> out;
    for (const auto & v : labeling.labels) {
        if (v > std::numeric_limits<Label>::max() || v < std::numeric_limits<Label>::min())
            throw OverflowError("label " + text(v) + " exceeds 64-bit range");
        out.push_back(static_cast<Label>(v));
    }
    return LabelSet(std::move(out));
}

auto star_chi_values(int64_t n) -> StarChi
{
    if (n < 2)
        throw DomainError("star order n must be >= 2, got " + to_string(n));
    auto k = static_cast<size_t>(n - 1);
    return { k, k };
}

auto star_chi_oracle(const StarLabeling & labeling) -> StarChi
{
    auto graph = build_graph(machine_labels(labeling));
    auto chi = exact_chromatic_index(graph, std::max(graph.size(), default_solver_budget));
    return { chi.value, edge_sum_chromatic_number(graph) };
}

} // namespace sumgraph
