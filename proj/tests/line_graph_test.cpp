#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "radio/certificates.hpp"
#include "radio/families.hpp"
#include "radio/line_graph.hpp"
#include "test_util.hpp"

using namespace radio;

namespace {

bool same_degree_sequence(const Graph& a, const Graph& b) {
    if (a.p != b.p) return false;
    std::vector<int> da, db;
    for (Vertex v = 0; v < a.p; ++v) da.push_back(a.degree(v));
    for (Vertex v = 0; v < b.p; ++v) db.push_back(b.degree(v));
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    return da == db;
}

}  // namespace

TEST_CASE("line graph of small trees") {
    Graph p4 = path_graph(4);
    LineGraphOfTree lt = line_graph_of_tree(p4);
    CHECK(lt.root == 1);
    CHECK(lt.graph.p == 3);
    CHECK(lt.graph.edge_count() == 2);
    CHECK(lt.name_of == std::vector<Vertex>{0, 2, 3});
    CHECK(lt.lg_of[0] == 0);
    CHECK(lt.lg_of[1] == -1);
    CHECK(lt.lg_of[2] == 1);
    CHECK(lt.lg_of[3] == 2);
    // edges 0-1 and 1-2 meet at vertex 1, edges 1-2 and 2-3 at vertex 2
    CHECK(lt.graph.adjacent(0, 1));
    CHECK(lt.graph.adjacent(1, 2));
    CHECK_FALSE(lt.graph.adjacent(0, 2));

    Graph p3 = path_graph(3);
    CHECK(line_graph_of_tree(p3).graph.p == 2);

    Graph star = spider_graph({1, 1, 1});
    LineGraphOfTree ls = line_graph_of_tree(star);
    CHECK(ls.root == 0);
    CHECK(ls.graph.p == 3);
    CHECK(ls.graph.edge_count() == 3);  // edges at the hub pairwise meet

    CHECK_THROWS_AS(line_graph_of_tree(path_graph(2)), std::invalid_argument);
    CHECK_THROWS_AS(line_graph_of_tree(cycle_graph(4)), std::invalid_argument);
    CHECK_THROWS_AS(line_graph_of_tree(clique_graph(4)), std::invalid_argument);
}

TEST_CASE("explicit naming root must be a weight center") {
    Graph p4 = path_graph(4);
    LineGraphOfTree other = line_graph_of_tree(p4, 2);
    CHECK(other.root == 2);
    CHECK(other.name_of == std::vector<Vertex>{0, 1, 3});
    CHECK(same_degree_sequence(other.graph, line_graph_of_tree(p4).graph));
    CHECK_THROWS_AS(line_graph_of_tree(p4, 0), std::invalid_argument);
}

TEST_CASE("b subgraph collects the center edge and what hangs below it") {
    // legs 2,1,1: line center is the edge into the long leg, one edge below it
    LineGraphOfTree lt = line_graph_of_tree(spider_graph({2, 1, 1}));
    CHECK(b_subgraph(lt) == std::vector<Vertex>{0, 1});

    // legs 3,2,2: the whole long leg sits below the center edge
    LineGraphOfTree big = line_graph_of_tree(spider_graph({3, 2, 2}));
    CHECK(b_subgraph(big) == std::vector<Vertex>{0, 1, 2});

    // legs 2,2,2: the line graph has three centers
    LineGraphOfTree sym = line_graph_of_tree(spider_graph({2, 2, 2}));
    CHECK_THROWS_AS(b_subgraph(sym), std::invalid_argument);

    // two tree centers
    LineGraphOfTree path = line_graph_of_tree(path_graph(4));
    CHECK_THROWS_AS(b_subgraph(path), std::invalid_argument);
}

TEST_CASE("structural identities on fixed trees") {
    std::vector<Graph> trees;
    trees.push_back(path_graph(4));
    trees.push_back(path_graph(6));
    trees.push_back(path_graph(7));
    trees.push_back(spider_graph({2, 1, 1}));
    trees.push_back(spider_graph({2, 2, 2}));
    trees.push_back(spider_graph({2, 2, 2, 2}));
    trees.push_back(spider_graph({3, 2, 2}));
    trees.push_back(generate(BananaSpec{5, 4}).graph);
    trees.push_back(generate(FirecrackerSpec{3, 3}).graph);
    trees.push_back(generate(CaterpillarSpec{5, 3}).graph);
    for (const Graph& t : trees) {
        LineGraphOfTree lt = line_graph_of_tree(t);
        LineObsReport rep = line_obs_check(lt);
        CHECK(rep.sizes);
        CHECK(rep.distances);
        CHECK(rep.levels);
        CHECK(rep.total_level);
    }
    // the identities cannot depend on which of two centers names the edges
    LineObsReport other = line_obs_check(line_graph_of_tree(path_graph(6), 3));
    CHECK(other.all());
}

TEST_CASE("structural identities on random trees") {
    for (int i = 0; i < 50; ++i) {
        int p = 5 + i % 28;
        Graph t = random_block_graph(7 * i + 1, p, 2);
        CAPTURE(i);
        CHECK(line_obs_check(line_graph_of_tree(t)).all());
    }
}

TEST_CASE("transfer to line with two tree centers") {
    LineGraphOfTree lt = line_graph_of_tree(path_graph(4));
    TransferReport rep = transfer_to_line(lt, {1, 3, 0, 2});
    CHECK(rep.applicable_case == "line4-iii");
    CHECK(rep.ok);
    CHECK(rep.certified);
    CHECK(rep.span == 3);
    CHECK(rep.expected_span == 3);
    CHECK(rep.ordering == VertexOrdering{1, 2, 0});

    // the reversed ordering certifies too and transfers in the other orientation
    TransferReport rev = transfer_to_line(lt, {2, 0, 3, 1});
    CHECK(rev.applicable_case == "line4-iii");
    CHECK(rev.ok);
    CHECK(rev.span == 3);

    CHECK_THROWS_AS(transfer_to_line(lt, {0, 1, 2, 3}), std::invalid_argument);
}

TEST_CASE("transfer to line onto a clique skips the certificate") {
    // the line graph of a 3-leaf star is a triangle, diameter 1
    LineGraphOfTree lt = line_graph_of_tree(spider_graph({1, 1, 1}));
    TransferReport rep = transfer_to_line(lt, {1, 2, 3, 0});
    CHECK(rep.applicable_case == "line4-ii");
    CHECK(rep.ok);
    CHECK_FALSE(rep.certified);
    CHECK(rep.span == 2);
    CHECK(rep.expected_span == 2);
    REQUIRE(rep.labeling.has_value());
    CHECK_FALSE(validate_radio(all_pairs_distances(lt.graph), rep.labeling->labels, 1).has_value());
}

TEST_CASE("transfer to line with unique centers on both sides") {
    LineGraphOfTree lt = line_graph_of_tree(spider_graph({2, 1, 1}));

    TransferReport good = transfer_to_line(lt, {0, 3, 2, 4, 1});
    CHECK(good.applicable_case == "line4-i");
    CHECK(good.ok);
    CHECK(good.certified);
    CHECK(good.span == 4);
    CHECK(good.expected_span == 4);
    CHECK(good.ordering == VertexOrdering{0, 2, 1, 3});

    // certified tree ordering whose image places two same-branch vertices
    // next to each other: the construction yields nothing usable
    TransferReport bad = transfer_to_line(lt, {0, 2, 3, 4, 1});
    CHECK(bad.applicable_case == "line4-i");
    CHECK_FALSE(bad.ok);
    CHECK_FALSE(bad.certified);
    CHECK_FALSE(bad.detail.empty());

    // certified but not ending at the edge naming the line-graph center
    TransferReport off = transfer_to_line(lt, {0, 2, 3, 1, 4});
    CHECK(off.applicable_case == "none");
    CHECK_FALSE(off.ok);

    // even vertex count: the halving hypothesis cannot hold
    LineGraphOfTree even = line_graph_of_tree(spider_graph({2, 1, 1, 1}));
    TransferReport none = transfer_to_line(even, {0, 2, 4, 1, 3, 5});
    CHECK(none.applicable_case == "none");
    CHECK_FALSE(none.ok);
}

TEST_CASE("clique with a tail admits no certifying order") {
    // line graph of the 5-vertex spider with legs 2,1,1,1
    LineGraphOfTree lt = line_graph_of_tree(spider_graph({2, 1, 1, 1}));
    REQUIRE(lt.graph.p == 5);
    Analysis al = analyze(lt.graph);
    CHECK(lower_bound(al) == 5);

    VertexOrdering ord(5);
    std::iota(ord.begin(), ord.end(), 0);
    int certified = 0;
    do {
        if (certify(al, ord).certified) ++certified;
    } while (std::next_permutation(ord.begin(), ord.end()));
    CHECK(certified == 0);

    ExactResult exact = exact_radio_number(lt.graph, al.dist);
    CHECK(exact.rn == 6);  // the floor is unreachable here
}

TEST_CASE("reverse transfer with two tree centers") {
    LineGraphOfTree lt = line_graph_of_tree(path_graph(4));
    TransferReport rep = transfer_to_tree(lt, {1, 0, 2});
    CHECK(rep.applicable_case == "reverse-2centers");
    CHECK(rep.ok);
    CHECK(rep.certified);
    CHECK(rep.span == 5);
    CHECK(rep.expected_span == 5);
    CHECK(rep.ordering == VertexOrdering{2, 0, 3, 1});

    TransferReport rev = transfer_to_tree(lt, {2, 0, 1});
    CHECK(rev.applicable_case == "reverse-2centers");
    CHECK(rev.ok);
    CHECK(rev.span == 5);

    CHECK_THROWS_AS(transfer_to_tree(lt, {0, 1, 2}), std::invalid_argument);
}

TEST_CASE("reverse transfer with unique centers and odd order") {
    LineGraphOfTree lt = line_graph_of_tree(spider_graph({2, 1, 1}));
    TransferReport rep = transfer_to_tree(lt, {0, 2, 1, 3});
    CHECK(rep.applicable_case == "reverse-odd-p");
    CHECK(rep.ok);
    CHECK(rep.certified);
    CHECK(rep.span == 7);
    CHECK(rep.expected_span == 7);
    CHECK(rep.ordering == VertexOrdering{0, 1, 3, 2, 4});

    // even tree: no construction applies
    LineGraphOfTree even = line_graph_of_tree(spider_graph({2, 1, 1, 1}));
    Analysis al = analyze(even.graph);
    // (no certified line ordering exists there, so the precondition throws)
    CHECK_THROWS_AS(transfer_to_tree(even, {0, 1, 2, 3, 4}), std::invalid_argument);
}

TEST_CASE("reverse transfer with several line centers") {
    LineGraphOfTree lt = line_graph_of_tree(spider_graph({2, 2, 2, 2}));
    VertexOrdering ord{0, 5, 2, 7, 1, 4, 3, 6};
    Analysis al = analyze(lt.graph);
    REQUIRE(certify(al, ord).certified);

    TransferReport rep = transfer_to_tree(lt, ord);
    CHECK(rep.applicable_case == "reverse-multi-center");
    CHECK(rep.ok);
    CHECK(rep.certified);
    CHECK(rep.span == 17);
    CHECK(rep.expected_span == 17);
    CHECK(rep.ordering == VertexOrdering{0, 1, 6, 3, 8, 2, 5, 4, 7});
}

TEST_CASE("reverse transfer rejects nested edges placed too close") {
    // L(P_5) = P_4 certifies, but the path has nested edges two slots apart
    LineGraphOfTree lt = line_graph_of_tree(path_graph(5));
    TransferReport rep = transfer_to_tree(lt, {1, 3, 0, 2});
    CHECK(rep.applicable_case == "none");
    CHECK(rep.detail.find("nested") != std::string::npos);
}

TEST_CASE("reverse transfer never fires on the short caterpillar") {
    // rn of this caterpillar exceeds its floor by one, so every certifying
    // line ordering must trip the nesting hypothesis
    Graph t = generate(CaterpillarSpec{5, 3}).graph;
    LineGraphOfTree lt = line_graph_of_tree(t);
    REQUIRE(lt.graph.p == 7);
    Analysis al = analyze(lt.graph);
    Analysis at = analyze(t);
    CHECK(lower_bound(al) == 10);
    CHECK(lower_bound(at) == 14);

    VertexOrdering first{0, 5, 2, 1, 3, 6, 4};
    REQUIRE(certify(al, first).certified);
    CHECK(transfer_to_tree(lt, first).applicable_case == "none");

    VertexOrdering ord(7);
    std::iota(ord.begin(), ord.end(), 0);
    int certified = 0;
    do {
        if (!certify(al, ord).certified) continue;
        ++certified;
        TransferReport rep = transfer_to_tree(lt, ord);
        CAPTURE(ord[0]);
        CHECK(rep.applicable_case == "none");
    } while (std::next_permutation(ord.begin(), ord.end()));
    CHECK(certified == 24);

    ExactResult exact = exact_radio_number(t, at.dist);
    CHECK(exact.rn == 15);
}

TEST_CASE("reverse transfer needs a span floor on the line graph") {
    LineGraphOfTree lt = line_graph_of_tree(spider_graph({1, 1, 1}));  // K_3
    CHECK_THROWS_AS(transfer_to_tree(lt, {0, 1, 2}), std::invalid_argument);
}

TEST_CASE("transfers round trip on the odd spider") {
    LineGraphOfTree lt = line_graph_of_tree(spider_graph({2, 1, 1}));
    TransferReport down = transfer_to_line(lt, {0, 3, 2, 4, 1});
    REQUIRE(down.ok);
    TransferReport up = transfer_to_tree(lt, down.ordering);
    REQUIRE(up.ok);
    CHECK(up.span == 7);
    CHECK(certify(analyze(lt.tree), up.ordering).certified);
}

TEST_CASE("closed forms match the line-graph span floor") {
    auto floor_of = [](const FamilySpec& spec) {
        Graph t = generate(spec).graph;
        return lower_bound(analyze(line_graph_of_tree(t).graph));
    };

    FamilySpec banana = BananaSpec{5, 4};
    CHECK(corollary_rn(banana) == 45);
    CHECK(corollary_rn(banana) == floor_of(banana));

    FamilySpec banana2 = BananaSpec{7, 5};
    CHECK(corollary_rn(banana2) == 72);
    CHECK(corollary_rn(banana2) == floor_of(banana2));

    FamilySpec odd_fire = FirecrackerSpec{3, 3};
    CHECK(corollary_rn(odd_fire) == 21);
    CHECK(corollary_rn(odd_fire) == floor_of(odd_fire));

    FamilySpec even_fire = FirecrackerSpec{4, 3};
    CHECK(corollary_rn(even_fire) == 35);
    CHECK(corollary_rn(even_fire) == floor_of(even_fire));

    FamilySpec one_root = LevelWiseRegularTreeSpec{1, {3, 3, 3}};
    CHECK(corollary_rn(one_root) == 40);
    CHECK(corollary_rn(one_root) == floor_of(one_root));

    FamilySpec two_roots = LevelWiseRegularTreeSpec{2, {3, 3, 3}};
    CHECK(corollary_rn(two_roots) == 61);
    CHECK(corollary_rn(two_roots) == floor_of(two_roots));

    FamilySpec mary = CompleteMArySpec{2, 3};
    CHECK(corollary_rn(mary) == 15);
    CHECK(corollary_rn(mary) == floor_of(mary));

    // uneven profiles hit every index of the products
    FamilySpec uneven1 = LevelWiseRegularTreeSpec{1, {4, 3, 5}};
    CHECK(corollary_rn(uneven1) == floor_of(uneven1));
    FamilySpec uneven2 = LevelWiseRegularTreeSpec{2, {3, 5, 4}};
    CHECK(corollary_rn(uneven2) == floor_of(uneven2));
}

TEST_CASE("closed forms reject out-of-range parameters") {
    CHECK_THROWS_AS(corollary_rn(BananaSpec{4, 4}), std::invalid_argument);
    CHECK_THROWS_AS(corollary_rn(BananaSpec{5, 3}), std::invalid_argument);
    CHECK_THROWS_AS(corollary_rn(FirecrackerSpec{2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(corollary_rn(FirecrackerSpec{3, 2}), std::invalid_argument);
    CHECK_THROWS_AS(corollary_rn(LevelWiseRegularTreeSpec{1, {3, 2, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(corollary_rn(CompleteMArySpec{2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(corollary_rn(CaterpillarSpec{5, 3}), std::invalid_argument);
    CHECK_THROWS_AS(corollary_rn(TreePathSpec{6}), std::invalid_argument);
}
