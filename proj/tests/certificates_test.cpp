#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "radio/certificates.hpp"
#include "test_util.hpp"

using namespace radio;

namespace {

Graph triangle_pendant() {
    return graph_from_edges(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}});
}

// Triangle {0,1,2} with a two-edge tail 0-3-4; the unique weight center is 0.
Graph triangle_tail() {
    return graph_from_edges(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}});
}

// Literal restatement of the cumulative inequalities, used to pin the prefix
// sum implementation.
std::optional<PairRef> eq_dij_naive(const Analysis& a, const VertexOrdering& ord) {
    int p = a.g.p;
    int64_t de = a.dist.diameter + a.centers.epsilon;
    for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j) {
            int64_t sum = 0;
            for (int t = i; t < j; ++t)
                sum += a.levels.level[ord[t]] + a.levels.level[ord[t + 1]];
            if (a.dist.at(ord[i], ord[j]) < sum - (j - i) * de + a.dist.diameter + 1)
                return PairRef{i, j};
        }
    return std::nullopt;
}

}  // namespace

TEST_CASE("a certified ordering on the triangle with a pendant") {
    Analysis a = analyze(triangle_pendant());
    CertificateReport rep = certify(a, {1, 3, 2, 0});
    CHECK(rep.lb == 4);
    CHECK(rep.cond_a);
    CHECK(rep.cond_b);
    CHECK(rep.cond_c);
    CHECK(rep.eq_dij_ok);
    CHECK(rep.certified);
    REQUIRE(rep.span.has_value());
    CHECK(*rep.span == 4);
    CHECK(rep.a_star);
    CHECK(rep.b_star);
    REQUIRE(rep.sufficient.has_value());
    CHECK_FALSE(rep.sufficient->short_consecutive);
    CHECK(rep.sufficient->bounded_steps);
    CHECK(rep.sufficient->spread_branches);
}

TEST_CASE("path with five vertices has no certified ordering") {
    Analysis a = analyze(path_graph(5));

    CertificateReport rep = certify(a, {0, 3, 1, 4, 2});
    CHECK_FALSE(rep.certified);
    CHECK_FALSE(rep.cond_a);  // end levels sum to 2, eps is 1
    CHECK(rep.cond_b);
    CHECK(rep.cond_c);        // the labeling is valid, just not floor-tight
    CHECK(rep.eq_dij_ok);
    CHECK(rep.reason.find("condition (a)") != std::string::npos);

    VertexOrdering ord(5);
    std::iota(ord.begin(), ord.end(), 0);
    int certified = 0;
    do {
        ThmLbReport thm = check_thm_lb(a, ord);
        bool eq_ok = !check_eq_dij(a, ord).has_value();
        bool floor_route = thm.cond_a && eq_ok;
        CHECK_FALSE(floor_route);
        if (certify(a, ord).certified) ++certified;
    } while (std::next_permutation(ord.begin(), ord.end()));
    CHECK(certified == 0);
}

TEST_CASE("local tests accept an ordering the cumulative inequalities reject") {
    // On the triangle with a tail, (0,1,4,2,3) passes (a), (b) and both
    // position-local tests, yet vertices 1 and 2 end up one apart with labels
    // two apart: the skip through the triangle is invisible to the local
    // bounds. The certificate must come out false with both routes agreeing.
    Analysis a = analyze(triangle_tail());
    CHECK(a.centers.epsilon == 1);
    CHECK(a.dist.diameter == 3);
    CHECK(lower_bound(a) == 7);

    VertexOrdering ord{0, 1, 4, 2, 3};
    ThmLbReport thm = check_thm_lb(a, ord);
    CHECK(thm.cond_a);
    CHECK(thm.cond_b);
    Main2Report m2 = check_main2(a, ord);
    CHECK(m2.a_star);
    CHECK(m2.b_star);

    auto eq_bad = check_eq_dij(a, ord);
    REQUIRE(eq_bad.has_value());
    CHECK(eq_bad->i == 1);
    CHECK(eq_bad->j == 3);
    CHECK_FALSE(thm.cond_c);

    CertificateReport rep = certify(a, ord);  // routes agree on "no"
    CHECK_FALSE(rep.certified);
    CHECK(rep.a_star);
    CHECK(rep.b_star);

    // The graph itself is floor-tight via a different ordering.
    CertificateReport good = certify(a, {1, 3, 2, 4, 0});
    CHECK(good.certified);
    CHECK(good.lb == 7);
    CHECK(*good.span == 7);
}

TEST_CASE("local level test failures are reported") {
    Analysis a = analyze(path_graph(5));
    // Parent-child pair placed adjacently: phi = 1 exceeds the slack.
    Main2Report m2 = check_main2(a, {0, 1, 3, 4, 2});
    CHECK(m2.a_star);
    CHECK_FALSE(m2.b_star);
    REQUIRE(m2.b_fail_pair.has_value());
    CHECK(m2.b_fail_pair->i == 0);
    CHECK(m2.b_fail_pair->j == 1);

    // Levels 2 exceed (d + eps) / 2 on a path of seven vertices nowhere;
    // stretch to see a_star fail: the ends of a nine-path sit at level 4
    // while d + eps is 9, so a_star holds; use the deep-branch fixture there.
    Graph deep = graph_from_edges(
        10, {{0, 1}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {0, 6}, {6, 7}, {7, 8}, {7, 9}, {8, 9}});
    Analysis b = analyze(deep);
    VertexOrdering ord{8, 9, 0, 1, 2, 3, 4, 5, 6, 7};
    Main2Report deep_m2 = check_main2(b, ord);
    CHECK_FALSE(deep_m2.a_star);  // 2*3 > d + eps = 5
    REQUIRE(deep_m2.a_fail_pos.has_value());
    CHECK(*deep_m2.a_fail_pos == 0);
}

TEST_CASE("sufficient tests require conditions (a) and (b)") {
    Analysis a = analyze(path_graph(5));
    CHECK_THROWS_AS(check_sufficient(a, {0, 3, 1, 4, 2}), std::invalid_argument);
}

TEST_CASE("cumulative inequality scan matches the naive sum") {
    std::mt19937 rng(11);
    for (const Graph& g : {spider_graph({3, 2, 2}), triangle_tail(), path_graph(7)}) {
        Analysis a = analyze(g);
        VertexOrdering ord(g.p);
        std::iota(ord.begin(), ord.end(), 0);
        for (int trial = 0; trial < 40; ++trial) {
            std::shuffle(ord.begin(), ord.end(), rng);
            auto fast = check_eq_dij(a, ord);
            auto slow = eq_dij_naive(a, ord);
            auto serial = check_eq_dij_serial(a, ord);
            CHECK(fast.has_value() == slow.has_value());
            CHECK(serial.has_value() == slow.has_value());
            if (fast && slow) {
                CHECK(fast->i == slow->i);
                CHECK(fast->j == slow->j);
                CHECK(serial->i == slow->i);
                CHECK(serial->j == slow->j);
            }
        }
    }
}

TEST_CASE("certificate routes agree across random orderings") {
    std::mt19937 rng(23);
    for (const Graph& g :
         {triangle_pendant(), triangle_tail(), spider_graph({2, 1, 1}), path_graph(6)}) {
        Analysis a = analyze(g);
        VertexOrdering ord(g.p);
        std::iota(ord.begin(), ord.end(), 0);
        for (int trial = 0; trial < 60; ++trial) {
            std::shuffle(ord.begin(), ord.end(), rng);
            CHECK_NOTHROW(certify(a, ord));  // logic_error would mean route disagreement
        }
    }
}
