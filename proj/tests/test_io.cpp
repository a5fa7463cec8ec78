#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gvm/errors.hpp"
#include "gvm/graph.hpp"
#include "gvm/io.hpp"
#include "gvm/verify.hpp"
#include "test_util.hpp"

using namespace gvm;

namespace {

Graph roundtrip(const Graph& g) {
    std::istringstream in(to_edge_list_string(g));
    return read_edge_list(in);
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) {
        path = (std::filesystem::temp_directory_path() / name).string();
    }
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("edge list writing") {
    CHECK(to_edge_list_string(path(3)) == "n 3\n0 1\n1 2\n");
    CHECK(to_edge_list_string(empty_graph(2)) == "n 2\n");
}

TEST_CASE("edge list reading") {
    std::istringstream in("# a comment\nn 4\n0 1\n\n2 3\n# trailing\n");
    Graph g = read_edge_list(in);
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 2);

    std::istringstream bad_header("m 4\n0 1\n");
    CHECK_THROWS_AS(read_edge_list(bad_header), parse_error);
    std::istringstream no_header("");
    CHECK_THROWS_AS(read_edge_list(no_header), parse_error);
    std::istringstream bad_edge("n 2\n0\n");
    CHECK_THROWS_AS(read_edge_list(bad_edge), parse_error);
    std::istringstream loop("n 2\n1 1\n");
    CHECK_THROWS_AS(read_edge_list(loop), domain_error);
    std::istringstream range("n 2\n0 7\n");
    CHECK_THROWS_AS(read_edge_list(range), domain_error);
}

TEST_CASE("edge list round trip on random graphs") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        Graph g = verify::random_graph(2 + static_cast<int>(seed % 8), 0.5, seed);
        CHECK(roundtrip(g) == g);
    }
}

TEST_CASE("constructor atoms") {
    CHECK(parse_graph_source("cycle:6") == cycle(6));
    CHECK(parse_graph_source("path:4") == path(4));
    CHECK(parse_graph_source("complete:5") == complete(5));
    CHECK(parse_graph_source("empty:3") == empty_graph(3));
    CHECK(parse_graph_source("kpartite:1,2,2") == complete_multipartite({1, 2, 2}));
    CHECK_THROWS_AS(parse_graph_source("cycle:2"), domain_error);
    CHECK_THROWS_AS(parse_graph_source("spiral:3"), parse_error);
}

TEST_CASE("product expressions") {
    Graph c3k2 = parse_graph_source("tensor(cycle:3,complete:2)");
    CHECK(c3k2.vertex_count() == 6);
    CHECK(c3k2.edge_count() == 6);

    Graph ring = parse_graph_source("hjoin(cycle:4;empty:2,empty:3,empty:2,empty:2)");
    CHECK(ring == test_util::c4_join_2322());

    Graph embedded = parse_graph_source("embed(path:2)");
    CHECK(embedded.vertex_count() == 4);
    CHECK(embedded.edge_count() == 4);

    CHECK(parse_graph_source("lex(complete:2,empty:2)") ==
          lexicographic(complete(2), empty_graph(2)));
    CHECK(parse_graph_source("corona(path:2;empty:2,empty:2)") ==
          generalized_corona(path(2), {empty_graph(2), empty_graph(2)}));
    CHECK(parse_graph_source("inflate(complete:2;0,1)") ==
          inflate(complete(2), {0, 1}));

    // Nesting and whitespace.
    Graph nested = parse_graph_source(" tensor( hjoin(path:2; empty:2, empty:2), complete:2 )");
    CHECK(nested == tensor(h_join(path(2), {empty_graph(2), empty_graph(2)}),
                           complete(2)));
}

TEST_CASE("expression grammar errors carry a position") {
    for (const char* bad : {"tensor(cycle:3", "tensor(cycle:3,complete:2,complete:2)",
                            "hjoin(cycle:4)", "inflate(path:2;a)", "warp(path:2)",
                            "cycle:3 trailing"}) {
        CAPTURE(bad);
        try {
            parse_graph_source(bad);
            CHECK(false);
        } catch (const parse_error& e) {
            CHECK(e.position != std::string::npos);
            CHECK(std::string(e.what()).find("position") != std::string::npos);
        } catch (const domain_error&) {
            CHECK(false);
        }
    }
}

TEST_CASE("file paths inside expressions") {
    TempFile tmp("gvm_io_test_graph.txt");
    write_edge_list_file(cycle(3), tmp.path);
    CHECK(read_edge_list_file(tmp.path) == cycle(3));
    CHECK(parse_graph_source(tmp.path) == cycle(3));
    CHECK(parse_graph_source("tensor(" + tmp.path + ",complete:2)") ==
          tensor(cycle(3), complete(2)));
    CHECK_THROWS_AS(parse_graph_source("/nonexistent/graph.txt"), parse_error);
}
