#include "radio/center.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

namespace radio {

CenterInfo compute_centers(const Graph& g, const DistanceMatrix& dist,
                           const BlockDecomposition& blocks) {
    CenterInfo info;
    info.wt.assign(g.p, 0);
    int64_t best = std::numeric_limits<int64_t>::max();
    for (Vertex v = 0; v < g.p; ++v) {
        int64_t w = 0;
        for (Vertex u = 0; u < g.p; ++u) w += dist.at(v, u);
        info.wt[v] = w;
        best = std::min(best, w);
    }
    for (Vertex v = 0; v < g.p; ++v)
        if (info.wt[v] == best) info.weight_centers.push_back(v);

    info.is_central.assign(g.p, 0);
    info.epsilon = info.weight_centers.size() == 1 ? 1 : 0;
    if (info.epsilon) {
        info.central_vertices = info.weight_centers;
    } else {
        for (size_t b = 0; b < blocks.blocks.size(); ++b) {
            const auto& blk = blocks.blocks[b];
            bool all_in = true;
            for (Vertex w : info.weight_centers)
                if (!std::binary_search(blk.begin(), blk.end(), w)) {
                    all_in = false;
                    break;
                }
            if (all_in) {
                info.central_block = static_cast<int>(b);
                break;
            }
        }
        if (info.central_block < 0)
            throw std::logic_error("weight centers do not share a block");
        info.central_vertices = blocks.blocks[info.central_block];
    }
    for (Vertex v : info.central_vertices) info.is_central[v] = 1;
    return info;
}

LevelStructure levels_and_branches(const Graph& g, const BlockDecomposition& blocks,
                                   const CenterInfo& centers) {
    LevelStructure ls;
    ls.level.assign(g.p, -1);
    ls.anchor.assign(g.p, -1);
    ls.parent.assign(g.p, -1);
    ls.branch_of.assign(g.p, -1);

    std::vector<Vertex> frontier;
    for (Vertex w : centers.central_vertices) {
        ls.level[w] = 0;
        ls.anchor[w] = w;
        frontier.push_back(w);
    }
    while (!frontier.empty()) {
        std::vector<Vertex> next;
        for (Vertex u : frontier) {
            for (Vertex v : g.adj[u]) {
                if (ls.level[v] < 0) {
                    ls.level[v] = ls.level[u] + 1;
                    next.push_back(v);
                }
            }
        }
        frontier = std::move(next);
    }

    std::vector<Vertex> by_level(g.p);
    for (Vertex v = 0; v < g.p; ++v) by_level[v] = v;
    std::sort(by_level.begin(), by_level.end(), [&](Vertex a, Vertex b) {
        return std::pair(ls.level[a], a) < std::pair(ls.level[b], b);
    });

    std::map<std::pair<Vertex, int>, int> branch_index;
    for (Vertex v : by_level) {
        int lv = ls.level[v];
        if (lv < 0) throw std::invalid_argument("graph is not connected");
        ls.total_level += lv;
        if (lv == 0) continue;
        Vertex par = -1;
        for (Vertex u : g.adj[v]) {
            if (ls.level[u] == lv - 1) {
                if (par >= 0)
                    throw std::logic_error("predecessor towards the center is not unique");
                par = u;
            }
        }
        ls.parent[v] = par;
        if (lv == 1) {
            ls.anchor[v] = par;
            std::pair<Vertex, int> key{par, blocks.block_of_edge(par, v)};
            auto [it, fresh] = branch_index.try_emplace(key, static_cast<int>(ls.branches.size()));
            if (fresh) ls.branches.push_back({key.first, key.second});
            ls.branch_of[v] = it->second;
        } else {
            ls.anchor[v] = ls.anchor[par];
            ls.branch_of[v] = ls.branch_of[par];
        }
    }
    return ls;
}

Analysis analyze(const Graph& g) {
    if (g.p <= 0) throw std::invalid_argument("empty graph");
    Analysis a;
    a.g = g;
    a.blocks = block_decomposition(g);
    if (!is_block_graph(g, a.blocks))
        throw std::invalid_argument("graph is not a connected block graph");
    a.dist = all_pairs_distances(g);
    a.centers = compute_centers(g, a.dist, a.blocks);
    a.levels = levels_and_branches(g, a.blocks, a.centers);
    return a;
}

GeoParams geo_params(const Analysis& a, Vertex u, Vertex v) {
    if (u == v) throw std::invalid_argument("geodesic parameters need distinct vertices");
    const LevelStructure& ls = a.levels;
    GeoParams gp{0, 0, 0};
    gp.delta = ls.anchor[u] != ls.anchor[v] ? 1 : 0;
    if (ls.branch_of[u] < 0 || ls.branch_of[u] != ls.branch_of[v]) return gp;

    // Same branch: walk the parent chains to their deepest common vertex,
    // remembering the child each side arrived from.
    Vertex x = u, y = v, cx = -1, cy = -1;
    while (ls.level[x] > ls.level[y]) {
        cx = x;
        x = ls.parent[x];
    }
    while (ls.level[y] > ls.level[x]) {
        cy = y;
        y = ls.parent[y];
    }
    while (x != y) {
        cx = x;
        x = ls.parent[x];
        cy = y;
        y = ls.parent[y];
    }
    gp.phi = ls.level[x];
    if (x != u && x != v && a.g.adjacent(cx, cy)) gp.rho = 1;
    return gp;
}

int distance_by_formula(const Analysis& a, Vertex u, Vertex v) {
    if (u == v) return 0;
    GeoParams gp = geo_params(a, u, v);
    return a.levels.level[u] + a.levels.level[v] + gp.delta - 2 * gp.phi - gp.rho;
}

}  // namespace radio
