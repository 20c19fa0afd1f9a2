#include <algorithm>
#include <stdexcept>

#include "doctest.h"
#include "radio/graph.hpp"
#include "test_util.hpp"

using namespace radio;

TEST_CASE("graph_from_edges validates input") {
    CHECK_THROWS_AS(graph_from_edges(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(graph_from_edges(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(graph_from_edges(3, {{-1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(graph_from_edges(3, {{0, 1}, {1, 0}}), std::invalid_argument);

    Graph g = graph_from_edges(4, {{2, 0}, {0, 1}, {2, 3}});
    CHECK(g.adjacent(0, 2));
    CHECK(g.adjacent(2, 0));
    CHECK_FALSE(g.adjacent(1, 2));
    CHECK(g.edge_count() == 3);
    CHECK(g.connected());
    CHECK_FALSE(graph_from_edges(4, {{0, 1}, {2, 3}}).connected());
}

TEST_CASE("graph text format round trips") {
    Graph g = spider_graph({2, 1});
    Graph h = parse_graph_string(format_graph(g));
    CHECK(h.p == g.p);
    CHECK(h.adj == g.adj);

    Graph c = parse_graph_string("# comment\n\n3\n0 1  # inline\n1 2\n");
    CHECK(c.p == 3);
    CHECK(c.edge_count() == 2);

    CHECK_THROWS_AS(parse_graph_string(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph_string("3 4\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph_string("3\n0\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph_string("3\n0 1 2\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph_string("2\n0 1\n0 1\n"), std::invalid_argument);
}

TEST_CASE("all pairs distances, serial and parallel agree") {
    for (const Graph& g : {path_graph(5), clique_graph(4), cycle_graph(7), spider_graph({3, 2, 2}),
                           graph_from_edges(5, {{0, 1}, {2, 3}})}) {
        DistanceMatrix a = all_pairs_distances_serial(g);
        DistanceMatrix b = all_pairs_distances(g);
        CHECK(a.d == b.d);
        CHECK(a.diameter == b.diameter);
    }

    DistanceMatrix m = all_pairs_distances(path_graph(5));
    CHECK(m.at(0, 4) == 4);
    CHECK(m.at(2, 2) == 0);
    CHECK(m.diameter == 4);

    DistanceMatrix k = all_pairs_distances(clique_graph(4));
    CHECK(k.diameter == 1);

    DistanceMatrix disc = all_pairs_distances(graph_from_edges(5, {{0, 1}, {2, 3}}));
    CHECK(disc.at(0, 2) == -1);
    CHECK(disc.at(4, 4) == 0);
}

TEST_CASE("block decomposition of a triangle with a pendant") {
    // 0-1-2 triangle, 3 hanging off 0
    Graph g = graph_from_edges(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}});
    BlockDecomposition bd = block_decomposition(g);
    REQUIRE(bd.blocks.size() == 2);
    CHECK(bd.blocks[0] == std::vector<Vertex>{0, 1, 2});
    CHECK(bd.blocks[1] == std::vector<Vertex>{0, 3});
    CHECK(bd.cut_vertices == std::vector<Vertex>{0});
    CHECK(bd.is_cut[0]);
    CHECK_FALSE(bd.is_cut[1]);
    CHECK(bd.block_of_edge(1, 2) == 0);
    CHECK(bd.block_of_edge(3, 0) == 1);
    CHECK_THROWS_AS(bd.block_of_edge(1, 3), std::invalid_argument);
    CHECK(bd.blocks_at(0) == std::vector<int>{0, 1});
    CHECK(bd.blocks_at(2) == std::vector<int>{0});
}

TEST_CASE("block decomposition of paths and cliques") {
    Graph p = path_graph(4);
    BlockDecomposition bp = block_decomposition(p);
    CHECK(bp.blocks.size() == 3);
    CHECK(bp.cut_vertices == std::vector<Vertex>{1, 2});

    Graph k = clique_graph(5);
    BlockDecomposition bk = block_decomposition(k);
    REQUIRE(bk.blocks.size() == 1);
    CHECK(bk.blocks[0].size() == 5);
    CHECK(bk.cut_vertices.empty());

    // Two triangles sharing vertex 2
    Graph two = graph_from_edges(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
    BlockDecomposition bt = block_decomposition(two);
    REQUIRE(bt.blocks.size() == 2);
    CHECK(bt.cut_vertices == std::vector<Vertex>{2});
}

TEST_CASE("block graph recognition") {
    Graph tri = graph_from_edges(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}});
    CHECK(is_block_graph(tri, block_decomposition(tri)));
    CHECK(is_block_graph(path_graph(6), block_decomposition(path_graph(6))));
    Graph c4 = cycle_graph(4);
    CHECK_FALSE(is_block_graph(c4, block_decomposition(c4)));
    Graph disc = graph_from_edges(4, {{0, 1}, {2, 3}});
    CHECK_FALSE(is_block_graph(disc, block_decomposition(disc)));
    // C4 with a chord is biconnected but not complete
    Graph chord = graph_from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
    CHECK_FALSE(is_block_graph(chord, block_decomposition(chord)));
}

TEST_CASE("geodesic paths") {
    Graph g = spider_graph({2, 2});
    // leg one is 1,2; leg two is 3,4
    auto path = geodesic_path(g, 2, 4);
    CHECK(path == std::vector<Vertex>{2, 1, 0, 3, 4});
    CHECK(geodesic_path(g, 2, 2) == std::vector<Vertex>{2});

    Graph tri = clique_graph(3);
    CHECK(geodesic_path(tri, 0, 2) == std::vector<Vertex>{0, 2});

    CHECK_THROWS_AS(geodesic_path(cycle_graph(4), 0, 2), std::logic_error);
    CHECK_THROWS_AS(geodesic_path(graph_from_edges(4, {{0, 1}, {2, 3}}), 0, 3),
                    std::invalid_argument);
}
