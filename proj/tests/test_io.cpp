#include "oracle.hpp"

#include "sumgraph/edge_coloring.hpp"
#include "sumgraph/io.hpp"

#include <doctest.h>

using namespace sumgraph;
using io::Json;

TEST_CASE("graph JSON")
{
    auto g = interval_graph(-1, 1);
    CHECK(io::dump(io::graph_to_json(g)) == R"({"labels":[-1,0,1],"edges":[[-1,0],[-1,1],[0,1]]})");

    for (Label s = 1; s <= 6; ++s)
        for (Label r = 0; -r <= s; --r) {
            auto h = interval_graph(r, s);
            CHECK(io::graph_from_json(io::graph_to_json(h)) == h);
        }

    CHECK(io::graph_from_json(Json::parse(R"({"labels":[3,1,2]})")) == build_graph(LabelSet({ 1, 2, 3 })));
    CHECK(io::graph_from_json(Json::parse(R"({"labels":[1,2,3],"edges":[[2,1]]})")) == build_graph(LabelSet({ 1, 2, 3 })));

    CHECK_THROWS_AS(io::graph_from_json(Json::parse(R"({"labels":[1,2,3],"edges":[]})")), ValidationError);
    CHECK_THROWS_AS(io::graph_from_json(Json::parse(R"({"labels":[1,2,3],"edges":[[1,3]]})")), ValidationError);
    CHECK_THROWS_AS(io::graph_from_json(Json::parse(R"({"labels":[1,1]})")), ValidationError);
    CHECK_THROWS_AS(io::graph_from_json(Json::parse(R"({"labels":["a"]})")), ValidationError);
    CHECK_THROWS_AS(io::graph_from_json(Json::parse(R"([1,2])")), ValidationError);
    CHECK_THROWS_AS(io::graph_from_json(Json::parse(R"({"labels":[1,2,3],"edges":[[1]]})")), ValidationError);
}

TEST_CASE("class JSON matches the golden files")
{
    auto a = io::dump(io::classes_to_json(edge_sum_classes(interval_graph(-2, 4)))) + "\n";
    CHECK(a == oracle::read_file(oracle::data_path("golden/g_-2_4_classes.json")));
    auto b = io::dump(io::classes_to_json(edge_sum_classes(interval_graph(-1, 5)))) + "\n";
    CHECK(b == oracle::read_file(oracle::data_path("golden/g_-1_5_classes.json")));
}

TEST_CASE("coloring JSON")
{
    EdgeColoring c;
    c.assign(Edge(0, 1), 2);
    c.assign(Edge(-1, 0), 1);
    auto text = io::dump(io::coloring_to_json(c));
    CHECK(text == R"({"palette":2,"edges":[{"e":[-1,0],"c":1},{"e":[0,1],"c":2}]})");
    CHECK(io::coloring_from_json(Json::parse(text)) == c);

    auto t = theorem_coloring(-4, 7);
    CHECK(io::coloring_from_json(io::coloring_to_json(t)) == t);

    CHECK_THROWS_AS(io::coloring_from_json(Json::parse(R"({"edges":[{"e":[0,1]}]})")), ValidationError);
    CHECK_THROWS_AS(
        io::coloring_from_json(Json::parse(R"({"edges":[{"e":[0,1],"c":1},{"e":[1,0],"c":2}]})")), ValidationError);
    CHECK_THROWS_AS(io::coloring_from_json(Json::parse(R"({"edges":[{"e":[0,1],"c":0}]})")), ValidationError);
}

TEST_CASE("certificate JSON")
{
    auto bare = io::certificate_from_json(Json::parse("[[[1,0]],[[0,2],[-1,1]]]"));
    REQUIRE(bare.classes.size() == 2);
    CHECK(bare.classes[0] == std::vector<Edge>{ Edge(0, 1) });
    auto wrapped = io::certificate_from_json(Json::parse(R"({"classes":[[[1,0]],[[0,2],[-1,1]]]})"));
    CHECK(wrapped == bare);
    CHECK_THROWS_AS(io::certificate_from_json(Json::parse("{}")), ValidationError);
    CHECK_THROWS_AS(io::certificate_from_json(Json::parse("[[1,2]]")), ValidationError);
}

TEST_CASE("report JSON")
{
    auto r = verify_proper(interval_graph(0, 3), certificate_g0s(3));
    CHECK(io::dump(io::report_to_json(r))
          == R"({"covers_all_edges":true,"pairwise_disjoint":true,"proper_at_every_vertex":true,"palette_size":3,"valid":true,"issues":[]})");
}

TEST_CASE("palette names")
{
    CHECK(io::palette_name(1) == "gray");
    CHECK(io::palette_name(11) == "olive");
    CHECK(io::palette_name(12) == "black");
    CHECK(io::palette_name(13) == "0.100 0.800 0.900");
    CHECK(io::palette_name(14) == "0.718 0.800 0.900");
    CHECK(io::palette_name(13) != io::palette_name(14));
    CHECK_THROWS_AS(io::palette_name(0), DomainError);
}

TEST_CASE("DOT export")
{
    auto g = interval_graph(-1, 1);
    CHECK(io::graph_to_dot(g) == "graph G {\n  -1;\n  0;\n  1;\n  -1 -- 0;\n  -1 -- 1;\n  0 -- 1;\n}\n");

    auto c = theorem_coloring(-4, 7);
    auto dot = io::coloring_to_dot(interval_graph(-4, 7), c);
    CHECK(dot.find("  -3 -- 7 [color=\"gray\", label=\"c1\"];\n") != std::string::npos);
    CHECK(dot.find("  -4 -- 0 [color=\"olive\", label=\"c11\"];\n") != std::string::npos);
}
