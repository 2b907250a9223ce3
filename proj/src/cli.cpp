#include "sumgraph/cli.hpp"

#include "sumgraph/closed_forms.hpp"
#include "sumgraph/edge_coloring.hpp"
#include "sumgraph/edge_sum.hpp"
#include "sumgraph/extremal.hpp"
#include "sumgraph/io.hpp"
#include "sumgraph/star_labeling.hpp"
#include "sumgraph/suite.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>

using std::optional;
using std::string;
using std::vector;

namespace sumgraph::cli {

namespace {

using io::Json;

/// Raised by a handler when a coloring or certificate fails verification;
/// the document has already been emitted.
struct VerificationFailed
{
    string message;
};

struct GraphSource
{
    vector<Label> interval;
    vector<Label> labels;
    string input;
};

auto add_graph_source(CLI::App * cmd, GraphSource & src) -> void
{
    auto * iv = cmd->add_option("--interval", src.interval, "G_{r,s} on [r, s]")->expected(2)->allow_extra_args(false);
    auto * ls = cmd->add_option("--labels", src.labels, "Comma-separated label set S")->delimiter(',');
    auto * in = cmd->add_option("--input", src.input, "Graph JSON document");
    iv->excludes(ls)->excludes(in);
    ls->excludes(in);
}

auto read_json_file(const string & path) -> Json
{
    std::ifstream f(path);
    if (! f)
        throw ValidationError("cannot open '" + path + "'");
    try {
        return Json::parse(f);
    }
    catch (const Json::parse_error & e) {
        throw ValidationError("'" + path + "' is not valid JSON: " + e.what());
    }
}

auto load_graph(const GraphSource & src) -> IntegralSumGraph
{
    if (! src.interval.empty())
        return interval_graph(src.interval[0], src.interval[1]);
    if (! src.labels.empty())
        return build_graph(LabelSet(src.labels));
    if (! src.input.empty())
        return io::graph_from_json(read_json_file(src.input));
    throw ValidationError("give the graph with --interval r s, --labels a,b,... or --input file");
}

/// [r, s] if the labels are consecutive integers.
auto interval_of(const IntegralSumGraph & g) -> optional<std::pair<Label, Label>>
{
    auto ls = g.labels();
    for (size_t i = 1; i < ls.size(); ++i)
        if (ls[i] != ls[i - 1] + 1)
            return std::nullopt;
    return std::pair{ ls.front(), ls.back() };
}

auto require_interval(const IntegralSumGraph & g) -> std::pair<Label, Label>
{
    auto iv = interval_of(g);
    if (! iv)
        throw DomainError("this operation needs an interval graph G_{r,s}");
    return *iv;
}

auto builtin_certificate(const IntegralSumGraph & g) -> ColorCertificate
{
    auto [r, s] = require_interval(g);
    if (r == 0 && s >= 1)
        return certificate_g0s(s);
    if (r == -1 && s >= 2)
        return certificate_g_minus1_s(s);
    if (r == -s && s >= 2 && s <= 6)
        return certificate_g_ss(s);
    throw DomainError("no built-in certificate for G_{" + std::to_string(r) + "," + std::to_string(s) + "}");
}

auto solver_budget(optional<std::size_t> flag) -> std::size_t
{
    if (flag)
        return *flag;
    if (const char * env = std::getenv("SUMGRAPH_SOLVER_BUDGET")) {
        try {
            return std::stoul(env);
        }
        catch (const std::exception &) {
            throw ValidationError("SUMGRAPH_SOLVER_BUDGET must be a non-negative integer");
        }
    }
    return default_solver_budget;
}

class Runner
{
public:
    Runner(std::ostream & out)
        : _out(out)
    {
    }

    string format = "json";
    string output;

    auto emit(const string & text) -> void
    {
        if (output.empty()) {
            _out << text;
            return;
        }
        std::ofstream f(output);
        if (! f)
            throw ValidationError("cannot write '" + output + "'");
        f << text;
    }

    auto emit(const Json & doc) -> void { emit(io::dump(doc) + "\n"); }

    auto json_only(const string & cmd) const -> void
    {
        if (format != "json")
            throw CLI::ValidationError(cmd + " only produces JSON");
    }

    auto emit_coloring(const IntegralSumGraph & g, const EdgeColoring & c) -> void
    {
        auto report = verify_proper(g, c);
        if (format == "dot")
            emit(io::coloring_to_dot(g, c));
        else
            emit(io::coloring_to_json(c));
        if (! report.valid())
            throw VerificationFailed{ "coloring is not proper: " + report.issues.front() };
    }

private:
    std::ostream & _out;
};

auto star_labels_json(const StarLabeling & sl) -> Json
{
    bool fits = true;
    for (const auto & v : sl.labels)
        fits = fits && v <= std::numeric_limits<Label>::max();
    Json labels = Json::array();
    for (const auto & v : sl.labels) {
        if (fits)
            labels.push_back(static_cast<Label>(v));
        else
            labels.push_back(v.str());
    }
    return labels;
}

} // namespace

auto run(const vector<string> & args, std::ostream & out, std::ostream & err) -> int
{
    CLI::App app{ "Integral sum graphs: construction, edge-sum classes, edge colorings", "sumgraph" };
    app.require_subcommand(1);
    app.fallthrough();

    Runner runner(out);
    app.add_option("--format", runner.format, "json or dot")->check(CLI::IsMember({ "json", "dot" }));
    app.add_option("--output", runner.output, "Write the document here instead of stdout");

    GraphSource gen_src, classes_src, color_src, chi_src, verify_src;

    auto * gen = app.add_subcommand("gen", "Build an integral sum graph");
    add_graph_source(gen, gen_src);

    auto * classes = app.add_subcommand("classes", "Edge-sum class partition");
    add_graph_source(classes, classes_src);

    string scheme;
    string color_cert_file;
    optional<std::size_t> color_budget;
    auto * color = app.add_subcommand("color", "Proper edge coloring");
    add_graph_source(color, color_src);
    color->add_option("--scheme", scheme)->required()->check(CLI::IsMember({ "theorem", "edgesum", "exact", "certificate" }));
    color->add_option("--certificate", color_cert_file, "Certificate JSON for --scheme certificate");
    color->add_option("--budget", color_budget, "Exact solver edge guard");

    string method;
    string chi_cert_file;
    optional<std::size_t> chi_budget;
    auto * chi = app.add_subcommand("chi", "Chromatic index");
    add_graph_source(chi, chi_src);
    chi->add_option("--method", method)->required()->check(CLI::IsMember({ "exact", "certificate" }));
    chi->add_option("--certificate", chi_cert_file, "Certificate JSON for --method certificate");
    chi->add_option("--budget", chi_budget, "Exact solver edge guard");

    std::int64_t star_n = 0, star_t = 0, star_d = 0;
    auto * star = app.add_subcommand("star", "Integral sum labeling of the star K_{1,n-1}");
    star->add_option("n", star_n)->required();
    star->add_option("t", star_t)->required();
    star->add_option("d", star_d)->required();

    std::int64_t order = 0;
    auto * extremal = app.add_subcommand("extremal", "Edge counts of all interval graphs of one order");
    extremal->add_option("--order", order, "Graph order (number of vertices)")->required();

    auto * formula = app.add_subcommand("formula", "Closed-form values");
    formula->require_subcommand(1);
    std::int64_t fn = 0, fi = 0, fr = 0, fs = 0;
    auto * f_deg_gn = formula->add_subcommand("degree-gn", "Degree of i in G_n");
    f_deg_gn->add_option("--n", fn)->required();
    f_deg_gn->add_option("--i", fi)->required();
    auto * f_deg_grs = formula->add_subcommand("degree-grs", "Degree of i in G_{r,s}");
    f_deg_grs->add_option("--r", fr)->required();
    f_deg_grs->add_option("--s", fs)->required();
    f_deg_grs->add_option("--i", fi)->required();
    auto * f_edges_gn = formula->add_subcommand("edges-gn", "||G_n||");
    f_edges_gn->add_option("--n", fn)->required();
    auto * f_edges_grs = formula->add_subcommand("edges-grs", "||G_{r,s}||, all three forms");
    f_edges_grs->add_option("--r", fr)->required();
    f_edges_grs->add_option("--s", fs)->required();
    auto * f_chi_sum = formula->add_subcommand("chi-sum", "Edge sum chromatic number of G_{r,s}");
    f_chi_sum->add_option("--r", fr)->required();
    f_chi_sum->add_option("--s", fs)->required();

    bool verify_all = false;
    unsigned threads = 0;
    string verify_coloring, verify_cert;
    auto * verify = app.add_subcommand("verify", "Check colorings, certificates, or the full invariant suite");
    verify->add_flag("--all", verify_all, "Run every invariant check");
    verify->add_option("--threads", threads, "Workers for --all (0 = all cores)");
    add_graph_source(verify, verify_src);
    verify->add_option("--coloring", verify_coloring, "Coloring JSON to verify");
    verify->add_option("--certificate", verify_cert, "Certificate JSON to verify");

    vector<string> storage{ "sumgraph" };
    storage.insert(storage.end(), args.begin(), args.end());
    vector<const char *> argv;
    for (const auto & a : storage)
        argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    }
    catch (const CLI::CallForHelp &) {
        out << app.help();
        return exit_ok;
    }
    catch (const CLI::ParseError & e) {
        Json doc{ { "error", { { "kind", "usage" }, { "message", e.what() } } } };
        err << io::dump(doc) << "\n";
        return exit_usage;
    }

    try {
        if (gen->parsed()) {
            auto g = load_graph(gen_src);
            if (runner.format == "dot")
                runner.emit(io::graph_to_dot(g));
            else
                runner.emit(io::graph_to_json(g));
        }
        else if (classes->parsed()) {
            auto g = load_graph(classes_src);
            if (runner.format == "dot")
                runner.emit(io::coloring_to_dot(g, edge_sum_coloring(g)));
            else
                runner.emit(io::classes_to_json(edge_sum_classes(g)));
        }
        else if (color->parsed()) {
            auto g = load_graph(color_src);
            if (scheme == "theorem") {
                auto [r, s] = require_interval(g);
                runner.emit_coloring(g, theorem_coloring(r, s));
            }
            else if (scheme == "edgesum")
                runner.emit_coloring(g, edge_sum_coloring(g));
            else if (scheme == "exact") {
                auto result = exact_chromatic_index(g, solver_budget(color_budget));
                auto coloring = result.witness ? *result.witness
                                               : *search_coloring(g, result.value, std::numeric_limits<std::uint64_t>::max());
                runner.emit_coloring(g, coloring);
            }
            else {
                auto cert = color_cert_file.empty() ? builtin_certificate(g)
                                                    : io::certificate_from_json(read_json_file(color_cert_file));
                auto report = verify_proper(g, cert);
                if (! report.valid()) {
                    runner.emit(io::report_to_json(report));
                    throw VerificationFailed{ "certificate fails verification: " + report.issues.front() };
                }
                runner.emit_coloring(g, EdgeColoring::from_certificate(cert));
            }
        }
        else if (chi->parsed()) {
            runner.json_only("chi");
            auto g = load_graph(chi_src);
            Json doc;
            doc["order"] = g.order();
            doc["edges"] = g.size();
            doc["max_degree"] = g.max_degree();
            doc["edge_sum_chromatic_number"] = edge_sum_chromatic_number(g);
            doc["method"] = method;
            if (method == "exact") {
                auto result = exact_chromatic_index(g, solver_budget(chi_budget));
                doc["lower"] = result.value;
                doc["upper"] = result.value;
                doc["exact"] = true;
                doc["chromatic_index"] = result.value;
                doc["search_nodes"] = result.nodes;
                runner.emit(doc);
            }
            else {
                auto cert = chi_cert_file.empty() ? builtin_certificate(g)
                                                  : io::certificate_from_json(read_json_file(chi_cert_file));
                auto report = verify_proper(g, cert);
                doc["certificate"] = io::report_to_json(report);
                if (! report.valid()) {
                    runner.emit(doc);
                    throw VerificationFailed{ "certificate fails verification: " + report.issues.front() };
                }
                auto b = chi_via_certificate(g, cert);
                doc["lower"] = b.lower;
                doc["upper"] = b.upper;
                doc["exact"] = b.exact;
                doc["chromatic_index"] = b.exact ? Json(b.upper) : Json(nullptr);
                runner.emit(doc);
            }
        }
        else if (star->parsed()) {
            auto sl = star_labels(star_n, star_t, star_d);
            auto report = verify_star(sl);
            if (runner.format == "dot")
                runner.emit(io::graph_to_dot(build_graph(machine_labels(sl))));
            else {
                Json doc;
                doc["n"] = sl.n;
                doc["t"] = sl.t;
                doc["d"] = sl.d;
                doc["labels"] = star_labels_json(sl);
                Json rep;
                rep["distinct"] = report.distinct;
                rep["center_is_zero"] = report.center_is_zero;
                rep["strictly_increasing"] = report.strictly_increasing;
                rep["center_adjacent_to_all"] = report.center_adjacent_to_all;
                rep["no_leaf_edges"] = report.no_leaf_edges;
                rep["edge_count"] = report.edge_count;
                rep["valid"] = report.valid();
                rep["issues"] = report.issues;
                doc["report"] = rep;
                runner.emit(doc);
            }
            if (! report.valid())
                throw VerificationFailed{ "labeling is not a star" };
        }
        else if (extremal->parsed()) {
            runner.json_only("extremal");
            if (order < 3)
                throw DomainError("--order must be >= 3");
            auto m = interval_maximum(order - 1);
            auto spec_json = [](const IntervalSpec & sp) { return Json{ { "r", sp.r }, { "s", sp.s } }; };
            Json doc;
            doc["order"] = order;
            doc["table"] = Json::array();
            for (const auto & row : m.table)
                doc["table"].push_back({ { "r", row.spec.r }, { "s", row.spec.s }, { "edges", row.edges } });
            doc["max_edges"] = m.max_edges;
            doc["maximizers"] = Json::array();
            for (const auto & sp : m.maximizers)
                doc["maximizers"].push_back(spec_json(sp));
            doc["balanced"] = spec_json(m.balanced);
            doc["balanced_is_maximum"] = m.balanced_is_maximum();
            doc["balanced_is_unique_maximum"] = m.balanced_is_unique_maximum();
            runner.emit(doc);
            if (! m.balanced_is_maximum())
                throw VerificationFailed{ "balanced interval is not a maximum" };
        }
        else if (formula->parsed()) {
            runner.json_only("formula");
            Json doc;
            if (f_deg_gn->parsed())
                doc = { { "formula", "degree-gn" }, { "n", fn }, { "i", fi }, { "value", degree_formula_gn(fn, fi) } };
            else if (f_deg_grs->parsed())
                doc = { { "formula", "degree-grs" }, { "r", fr }, { "s", fs }, { "i", fi },
                    { "value", degree_formula_grs(fr, fs, fi) } };
            else if (f_edges_gn->parsed())
                doc = { { "formula", "edges-gn" }, { "n", fn }, { "value", edge_count_gn(fn) } };
            else if (f_edges_grs->parsed())
                doc = { { "formula", "edges-grs" }, { "r", fr }, { "s", fs }, { "value", edge_count_grs(fr, fs) },
                    { "quarter_form", edge_count_grs_quarter(fr, fs) }, { "parity_form", edge_count_parity(fr, fs) } };
            else
                doc = { { "formula", "chi-sum" }, { "r", fr }, { "s", fs }, { "value", chi_sum_formula(fr, fs) } };
            runner.emit(doc);
        }
        else if (verify->parsed()) {
            runner.json_only("verify");
            if (verify_all) {
                auto results = run_invariant_suite(threads);
                Json doc;
                bool all = true;
                doc["checks"] = Json::array();
                for (const auto & r : results) {
                    doc["checks"].push_back({ { "name", r.name }, { "passed", r.passed }, { "detail", r.detail } });
                    all = all && r.passed;
                }
                doc["passed"] = all;
                runner.emit(doc);
                if (! all)
                    throw VerificationFailed{ "invariant suite has failures" };
            }
            else {
                auto g = load_graph(verify_src);
                VerificationReport report;
                if (! verify_coloring.empty())
                    report = verify_proper(g, io::coloring_from_json(read_json_file(verify_coloring)));
                else if (! verify_cert.empty())
                    report = verify_proper(g, io::certificate_from_json(read_json_file(verify_cert)));
                else
                    throw ValidationError("verify needs --all, --coloring or --certificate");
                runner.emit(io::report_to_json(report));
                if (! report.valid())
                    throw VerificationFailed{ report.issues.front() };
            }
        }
    }
    catch (const CLI::ValidationError & e) {
        err << io::dump(Json{ { "error", { { "kind", "usage" }, { "message", e.what() } } } }) << "\n";
        return exit_usage;
    }
    catch (const VerificationFailed & e) {
        err << io::dump(Json{ { "error", { { "kind", "verification" }, { "message", e.message } } } }) << "\n";
        return exit_verification;
    }
    catch (const ForeignEdgeError & e) {
        err << io::dump(Json{ { "error", { { "kind", e.kind() }, { "message", e.what() } } } }) << "\n";
        return exit_verification;
    }
    catch (const CertificateError & e) {
        err << io::dump(Json{ { "error", { { "kind", e.kind() }, { "message", e.what() } } } }) << "\n";
        return exit_verification;
    }
    catch (const Error & e) {
        err << io::dump(Json{ { "error", { { "kind", e.kind() }, { "message", e.what() } } } }) << "\n";
        return exit_error;
    }
    catch (const Json::exception & e) {
        err << io::dump(Json{ { "error", { { "kind", "validation" }, { "message", e.what() } } } }) << "\n";
        return exit_error;
    }
    return exit_ok;
}

} // namespace sumgraph::cli
