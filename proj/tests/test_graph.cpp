#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "gvm/errors.hpp"
#include "gvm/graph.hpp"
#include "gvm/verify.hpp"
#include "test_util.hpp"

using namespace gvm;
using test_util::isomorphic;

TEST_CASE("build validates and deduplicates") {
    Graph p3 = Graph::build(3, {{0, 1}, {1, 0}, {1, 2}});
    CHECK(p3 == path(3));
    CHECK(p3.edge_count() == 2);

    CHECK_THROWS_AS(Graph::build(2, {{0, 0}}), domain_error);
    CHECK_THROWS_AS(Graph::build(2, {{0, 2}}), domain_error);
    CHECK_THROWS_AS(Graph::build(0, {}), domain_error);
}

TEST_CASE("standard constructors") {
    CHECK(path(1).vertex_count() == 1);
    CHECK(path(4).edge_count() == 3);
    CHECK(cycle(4).edge_count() == 4);
    CHECK_THROWS_AS(cycle(2), domain_error);
    CHECK(complete(5).edge_count() == 10);
    CHECK(empty_graph(3).edge_count() == 0);

    Graph c4ish = complete_multipartite({2, 2});
    CHECK(c4ish.vertex_count() == 4);
    CHECK(c4ish.edge_count() == 4);
    for (int v = 0; v < 4; ++v) CHECK(c4ish.degree(v) == 2);
    CHECK(isomorphic(c4ish, cycle(4)));

    CHECK(complete_multipartite({1, 1, 1}) == complete(3));
    CHECK(complete_multipartite({4}) == empty_graph(4));
    CHECK_THROWS_AS(complete_multipartite({2, 0}), domain_error);
}

TEST_CASE("h_join") {
    Graph k23 = h_join(complete(2), {empty_graph(2), empty_graph(3)});
    CHECK(k23 == complete_multipartite({2, 3}));
    CHECK(k23.edge_count() == 6);

    Graph ring = test_util::c4_join_2322();
    CHECK(ring.vertex_count() == 9);
    CHECK(ring.edge_count() == 20);

    CHECK(h_join(path(2), {complete(1), complete(1)}) == complete(2));
    CHECK_THROWS_AS(h_join(path(2), {complete(1)}), domain_error);
}

TEST_CASE("lexicographic product") {
    CHECK(isomorphic(lexicographic(complete(2), empty_graph(2)), cycle(4)));
    CHECK(lexicographic(path(3), complete(1)) == path(3));
    CHECK(lexicographic(complete(2), complete(2)) == complete(4));
}

TEST_CASE("tensor product") {
    Graph c3k2 = tensor(cycle(3), complete(2));
    CHECK(c3k2.vertex_count() == 6);
    CHECK(c3k2.edge_count() == 6);
    CHECK(is_connected(c3k2));
    for (int v = 0; v < 6; ++v) CHECK(c3k2.degree(v) == 2);
    CHECK(isomorphic(c3k2, cycle(6)));

    Graph k2k2 = tensor(complete(2), complete(2));
    CHECK(k2k2.vertex_count() == 4);
    CHECK(k2k2.edge_count() == 2);
    CHECK_FALSE(is_connected(k2k2));

    CHECK(tensor(cycle(5), complete(1)) == empty_graph(5));
}

TEST_CASE("tensor degree law on random pairs") {
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        Graph g1 = verify::random_graph(2 + static_cast<int>(seed % 5), 0.5, seed);
        Graph g2 = verify::random_graph(2 + static_cast<int>((seed * 7) % 5), 0.6,
                                        seed + 100);
        Graph t = tensor(g1, g2);
        for (int u = 0; u < g1.vertex_count(); ++u)
            for (int v = 0; v < g2.vertex_count(); ++v)
                CHECK(t.degree(u * g2.vertex_count() + v) ==
                      g1.degree(u) * g2.degree(v));
        CHECK(all_degrees_even(t) ==
              (all_degrees_even(g1) || all_degrees_even(g2)));
    }
}

TEST_CASE("generalized corona") {
    Graph star = generalized_corona(complete(1), {empty_graph(3)});
    CHECK(star == complete_multipartite({1, 3}));

    Graph g = generalized_corona(complete(2), {empty_graph(2), empty_graph(2)});
    CHECK(g.vertex_count() == 6);
    CHECK(g.edge_count() == 5);
    CHECK(g.degree(0) == 3);
    CHECK(g.degree(1) == 3);
    for (int v = 2; v < 6; ++v) CHECK(g.degree(v) == 1);

    Graph p3corona = generalized_corona(path(3), {empty_graph(2), empty_graph(2),
                                                  empty_graph(2)});
    CHECK(p3corona.vertex_count() == 9);
    CHECK(p3corona.edge_count() == 8);
}

TEST_CASE("twin classes of the demonstration graph") {
    ReducedGraph rg = twin_classes(test_util::hub8());
    CHECK(rg.multiplicities == std::vector<int>{3, 1, 2, 2});
    CHECK(rg.classes[0] == std::vector<int>{0, 2, 5});
    CHECK(rg.classes[1] == std::vector<int>{1});
    CHECK(rg.classes[2] == std::vector<int>{3, 7});
    CHECK(rg.classes[3] == std::vector<int>{4, 6});
    // Quotient: class 1 adjacent to everything, classes 2 and 3 adjacent.
    CHECK(rg.quotient.edges() ==
          std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {1, 3}, {2, 3}});
}

TEST_CASE("twin classes of standard graphs") {
    ReducedGraph k23 = twin_classes(complete_multipartite({2, 3}));
    CHECK(k23.multiplicities == std::vector<int>{2, 3});
    CHECK(k23.quotient == complete(2));

    ReducedGraph k4 = twin_classes(complete(4));
    CHECK(k4.multiplicities == std::vector<int>(4, 1));
    CHECK(k4.quotient == complete(4));

    ReducedGraph c4 = twin_classes(cycle(4));
    CHECK(c4.multiplicities == std::vector<int>{2, 2});
    CHECK(c4.classes[0] == std::vector<int>{0, 2});
    CHECK(c4.quotient == complete(2));
}

TEST_CASE("twin class blocks are independent and reduction is idempotent") {
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
        Graph g = verify::random_graph(3 + static_cast<int>(seed % 6), 0.5, seed);
        ReducedGraph rg = twin_classes(g);
        int total = 0;
        for (const auto& block : rg.classes) {
            total += static_cast<int>(block.size());
            for (std::size_t i = 0; i < block.size(); ++i)
                for (std::size_t j = i + 1; j < block.size(); ++j) {
                    CHECK_FALSE(g.adjacent(block[i], block[j]));
                    CHECK(g.neighbors(block[i]) == g.neighbors(block[j]));
                }
        }
        CHECK(total == g.vertex_count());

        ReducedGraph again = twin_classes(rg.quotient);
        CHECK(again.quotient == rg.quotient);
        for (int m : again.multiplicities) CHECK(m == 1);
    }
}

TEST_CASE("joining empty blocks over the quotient rebuilds the graph") {
    for (const Graph& g : {test_util::hub8(), complete_multipartite({2, 3}),
                           cycle(4), test_util::c4_join_2322()}) {
        ReducedGraph rg = twin_classes(g);
        std::vector<Graph> blocks;
        for (int m : rg.multiplicities) blocks.push_back(empty_graph(m));
        Graph rebuilt = h_join(rg.quotient, blocks);

        // The natural bijection sends part i's vertices onto class i's
        // members in order; adjacency must transfer exactly.
        std::vector<int> to_original;
        for (const auto& block : rg.classes)
            to_original.insert(to_original.end(), block.begin(), block.end());
        const int n = g.vertex_count();
        REQUIRE(rebuilt.vertex_count() == n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                CHECK(rebuilt.adjacent(u, v) ==
                      g.adjacent(to_original[u], to_original[v]));
    }
}

TEST_CASE("inflate") {
    Graph p3ish = inflate(complete(2), {0, 1});
    CHECK(p3ish.vertex_count() == 3);
    CHECK(p3ish.edge_count() == 2);
    CHECK(isomorphic(p3ish, path(3)));

    Graph c4 = cycle(4);
    CHECK(inflate(c4, {0, 0}) == c4);

    Graph grown = inflate(c4, {1, 0});
    CHECK(grown.vertex_count() == 5);
    ReducedGraph rg = twin_classes(grown);
    CHECK(rg.multiplicities == std::vector<int>{3, 2});
    CHECK(grown.neighbors(4) == grown.neighbors(0));

    CHECK_THROWS_AS(inflate(c4, {1, 0, 0, 0}), domain_error);
    CHECK_THROWS_AS(inflate(c4, {-1, 0}), domain_error);
}

TEST_CASE("inflate preserves the quotient") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        Graph g = verify::random_graph(3 + static_cast<int>(seed % 5), 0.5, seed);
        ReducedGraph before = twin_classes(g);
        std::vector<int> extra;
        for (std::size_t i = 0; i < before.classes.size(); ++i)
            extra.push_back(static_cast<int>((seed + i) % 3));
        ReducedGraph after = twin_classes(inflate(g, extra));
        CHECK(after.quotient == before.quotient);
        for (std::size_t i = 0; i < before.classes.size(); ++i)
            CHECK(after.multiplicities[i] == before.multiplicities[i] + extra[i]);
    }
}

TEST_CASE("embedding into an all-even-class graph") {
    Graph grown = embed_in_gvm(complete(2));
    CHECK(grown.vertex_count() == 4);
    CHECK(grown.edge_count() == 4);
    CHECK(isomorphic(grown, cycle(4)));

    // Classes of size 2 are already even, so nothing is added.
    CHECK(embed_in_gvm(cycle(4)) == cycle(4));
    CHECK(embed_in_gvm(complete_multipartite({2, 2})) ==
          complete_multipartite({2, 2}));

    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
        Graph g = verify::random_graph(2 + static_cast<int>(seed % 5), 0.5, seed);
        Graph e = embed_in_gvm(g);
        CHECK(all_degrees_even(e));
        for (int m : twin_classes(e).multiplicities) CHECK(m % 2 == 0);
        for (int u = 0; u < g.vertex_count(); ++u)
            for (int v = u + 1; v < g.vertex_count(); ++v)
                CHECK(g.adjacent(u, v) == e.adjacent(u, v));
        CHECK(embed_in_gvm(e) == e);
    }
}

TEST_CASE("degree and connectivity predicates") {
    CHECK(has_pendant(path(3)));
    CHECK_FALSE(has_pendant(cycle(5)));
    CHECK(is_eulerian(cycle(5)));
    CHECK_FALSE(is_eulerian(path(3)));
    CHECK(all_degrees_same_parity(complete(4)));
    CHECK_FALSE(all_degrees_even(complete(4)));
    CHECK(all_degrees_even(cycle(6)));
    CHECK_FALSE(all_degrees_same_parity(path(3)));
    CHECK(is_connected(complete(1)));
    CHECK(is_eulerian(complete(1)));
    CHECK_FALSE(is_connected(empty_graph(2)));
    CHECK(has_isolated_vertex(empty_graph(1)));
    CHECK_FALSE(has_isolated_vertex(cycle(3)));
}
