// Compares the parallel kernels against their serial reference versions and
// reports speedups. Results must match exactly; a mismatch aborts the run.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <numeric>
#include <string>

#include "radio/certificates.hpp"
#include "radio/families.hpp"

using namespace radio;
using clk = std::chrono::steady_clock;

namespace {

double seconds(clk::time_point a, clk::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

void row(const char* name, double serial, double parallel, bool same) {
    std::printf("%-28s %10.3fs %10.3fs %8.2fx  %s\n", name, serial, parallel,
                parallel > 0 ? serial / parallel : 0.0, same ? "match" : "MISMATCH");
    if (!same) std::exit(1);
}

}  // namespace

int main(int argc, char** argv) {
    const int p = argc > 1 ? std::atoi(argv[1]) : 1500;
    std::printf("random block graph: p=%d, seed 42\n", p);
    Graph g = random_block_graph(42, p, 6);

    auto t0 = clk::now();
    DistanceMatrix ds = all_pairs_distances_serial(g);
    auto t1 = clk::now();
    DistanceMatrix dp = all_pairs_distances(g);
    auto t2 = clk::now();
    row("all_pairs_distances", seconds(t0, t1), seconds(t1, t2), ds.d == dp.d);

    Analysis a = analyze(g);
    VertexOrdering ord(g.p);
    std::iota(ord.begin(), ord.end(), 0);
    RadioLabeling f = greedy_min_labeling(a.dist, ord, a.dist.diameter);

    t0 = clk::now();
    auto vs = validate_radio_serial(a.dist, f.labels, a.dist.diameter);
    t1 = clk::now();
    auto vp = validate_radio(a.dist, f.labels, a.dist.diameter);
    t2 = clk::now();
    bool vsame = vs.has_value() == vp.has_value() &&
                 (!vs || (vs->u == vp->u && vs->v == vp->v));
    row("validate_radio", seconds(t0, t1), seconds(t1, t2), vsame);

    t0 = clk::now();
    auto es = check_eq_dij_serial(a, ord);
    t1 = clk::now();
    auto ep = check_eq_dij(a, ord);
    t2 = clk::now();
    bool esame = es.has_value() == ep.has_value() &&
                 (!es || (es->i == ep->i && es->j == ep->j));
    row("check_eq_dij", seconds(t0, t1), seconds(t1, t2), esame);

    Graph small = random_block_graph(7, 10, 4);
    DistanceMatrix sd = all_pairs_distances(small);
    ExactOptions one;
    ExactOptions four;
    four.threads = 4;
    t0 = clk::now();
    ExactResult r1 = exact_radio_number(small, sd, one);
    t1 = clk::now();
    ExactResult r4 = exact_radio_number(small, sd, four);
    t2 = clk::now();
    bool rsame = r1.rn == r4.rn && r1.labeling.labels == r4.labeling.labels;
    row("exact_radio_number (p=10)", seconds(t0, t1), seconds(t1, t2), rsame);

    return 0;
}
