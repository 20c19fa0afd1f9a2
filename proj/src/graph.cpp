#include "radio/graph.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace radio {

namespace {

int64_t edge_key(int p, Vertex u, Vertex v) {
    if (u > v) std::swap(u, v);
    return static_cast<int64_t>(u) * p + v;
}

}  // namespace

bool Graph::adjacent(Vertex u, Vertex v) const {
    const auto& row = adj[u];
    return std::binary_search(row.begin(), row.end(), v);
}

long long Graph::edge_count() const {
    long long twice = 0;
    for (const auto& row : adj) twice += static_cast<long long>(row.size());
    return twice / 2;
}

bool Graph::connected() const {
    if (p <= 1) return true;
    std::vector<char> seen(p, 0);
    std::vector<Vertex> frontier{0};
    seen[0] = 1;
    int reached = 1;
    while (!frontier.empty()) {
        std::vector<Vertex> next;
        for (Vertex u : frontier) {
            for (Vertex v : adj[u]) {
                if (!seen[v]) {
                    seen[v] = 1;
                    ++reached;
                    next.push_back(v);
                }
            }
        }
        frontier = std::move(next);
    }
    return reached == p;
}

Graph graph_from_edges(int p, const std::vector<std::pair<Vertex, Vertex>>& edges) {
    if (p < 0) throw std::invalid_argument("vertex count must be nonnegative");
    Graph g;
    g.p = p;
    g.adj.assign(p, {});
    for (auto [u, v] : edges) {
        if (u < 0 || u >= p || v < 0 || v >= p)
            throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) +
                                        " " + std::to_string(v));
        if (u == v) throw std::invalid_argument("self loop at vertex " + std::to_string(u));
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (Vertex u = 0; u < p; ++u) {
        auto& row = g.adj[u];
        std::sort(row.begin(), row.end());
        if (std::adjacent_find(row.begin(), row.end()) != row.end())
            throw std::invalid_argument("duplicate edge at vertex " + std::to_string(u));
    }
    return g;
}

Graph parse_graph(std::istream& in) {
    std::string line;
    int p = -1;
    std::vector<std::pair<Vertex, Vertex>> edges;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        if (p < 0) {
            long long n;
            if (!(ls >> n)) continue;  // blank or comment-only line
            std::string rest;
            if (ls >> rest)
                throw std::invalid_argument("line " + std::to_string(lineno) +
                                            ": expected a single vertex count");
            if (n < 0 || n > (1 << 26))
                throw std::invalid_argument("unreasonable vertex count");
            p = static_cast<int>(n);
            continue;
        }
        Vertex u, v;
        if (!(ls >> u)) continue;
        if (!(ls >> v))
            throw std::invalid_argument("line " + std::to_string(lineno) +
                                        ": expected two vertex ids");
        std::string rest;
        if (ls >> rest)
            throw std::invalid_argument("line " + std::to_string(lineno) +
                                        ": trailing tokens after edge");
        edges.emplace_back(u, v);
    }
    if (p < 0) throw std::invalid_argument("missing vertex count line");
    return graph_from_edges(p, edges);
}

Graph parse_graph_string(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

std::string format_graph(const Graph& g) {
    std::ostringstream out;
    out << g.p << "\n";
    for (Vertex u = 0; u < g.p; ++u)
        for (Vertex v : g.adj[u])
            if (u < v) out << u << " " << v << "\n";
    return out.str();
}

namespace {

void bfs_row(const Graph& g, Vertex src, int* row) {
    std::fill(row, row + g.p, -1);
    row[src] = 0;
    std::vector<Vertex> frontier{src};
    int depth = 0;
    while (!frontier.empty()) {
        ++depth;
        std::vector<Vertex> next;
        for (Vertex u : frontier) {
            for (Vertex v : g.adj[u]) {
                if (row[v] < 0) {
                    row[v] = depth;
                    next.push_back(v);
                }
            }
        }
        frontier = std::move(next);
    }
}

}  // namespace

DistanceMatrix all_pairs_distances_serial(const Graph& g) {
    DistanceMatrix m;
    m.p = g.p;
    m.d.assign(static_cast<size_t>(g.p) * g.p, -1);
    int diam = 0;
    for (Vertex s = 0; s < g.p; ++s) {
        int* row = m.d.data() + static_cast<size_t>(s) * g.p;
        bfs_row(g, s, row);
        for (Vertex v = 0; v < g.p; ++v) diam = std::max(diam, row[v]);
    }
    m.diameter = diam;
    return m;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
    DistanceMatrix m;
    m.p = g.p;
    m.d.assign(static_cast<size_t>(g.p) * g.p, -1);
    int diam = 0;
#pragma omp parallel for schedule(dynamic, 16) reduction(max : diam)
    for (Vertex s = 0; s < g.p; ++s) {
        int* row = m.d.data() + static_cast<size_t>(s) * g.p;
        bfs_row(g, s, row);
        for (Vertex v = 0; v < g.p; ++v) diam = std::max(diam, row[v]);
    }
    m.diameter = diam;
    return m;
}

int BlockDecomposition::block_of_edge(Vertex u, Vertex v) const {
    int p = static_cast<int>(is_cut.size());
    auto it = block_of_edge_map.find(edge_key(p, u, v));
    if (it == block_of_edge_map.end())
        throw std::invalid_argument("no such edge: " + std::to_string(u) + " " +
                                    std::to_string(v));
    return it->second;
}

std::vector<int> BlockDecomposition::blocks_at(Vertex v) const {
    std::vector<int> out;
    for (size_t b = 0; b < blocks.size(); ++b)
        if (std::binary_search(blocks[b].begin(), blocks[b].end(), v))
            out.push_back(static_cast<int>(b));
    return out;
}

BlockDecomposition block_decomposition(const Graph& g) {
    BlockDecomposition out;
    out.is_cut.assign(g.p, 0);

    std::vector<int> disc(g.p, -1), low(g.p, 0);
    std::vector<std::pair<Vertex, Vertex>> estack;
    std::vector<std::vector<std::pair<Vertex, Vertex>>> comp_edges;
    int timer = 0;

    struct Frame {
        Vertex u, parent;
        size_t idx;
    };

    for (Vertex root = 0; root < g.p; ++root) {
        if (disc[root] >= 0) continue;
        std::vector<Frame> st;
        disc[root] = low[root] = timer++;
        st.push_back({root, -1, 0});
        while (!st.empty()) {
            Frame& f = st.back();
            Vertex u = f.u;
            if (f.idx < g.adj[u].size()) {
                Vertex v = g.adj[u][f.idx++];
                if (v == f.parent) continue;
                if (disc[v] < 0) {
                    estack.emplace_back(u, v);
                    disc[v] = low[v] = timer++;
                    st.push_back({v, u, 0});
                } else if (disc[v] < disc[u]) {
                    estack.emplace_back(u, v);
                    low[u] = std::min(low[u], disc[v]);
                }
            } else {
                st.pop_back();
                if (st.empty()) break;
                Frame& pf = st.back();
                low[pf.u] = std::min(low[pf.u], low[u]);
                if (low[u] >= disc[pf.u]) {
                    std::vector<std::pair<Vertex, Vertex>> comp;
                    while (true) {
                        auto e = estack.back();
                        estack.pop_back();
                        comp.push_back(e);
                        if (e.first == pf.u && e.second == u) break;
                    }
                    comp_edges.push_back(std::move(comp));
                }
            }
        }
    }

    // Vertex sets per component, in a canonical order.
    for (auto& comp : comp_edges) {
        std::vector<Vertex> vs;
        for (auto [a, b] : comp) {
            vs.push_back(a);
            vs.push_back(b);
        }
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        out.blocks.push_back(std::move(vs));
    }
    std::vector<int> order(out.blocks.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return out.blocks[a] < out.blocks[b]; });
    std::vector<std::vector<Vertex>> sorted_blocks;
    for (size_t i = 0; i < order.size(); ++i) {
        sorted_blocks.push_back(std::move(out.blocks[order[i]]));
        for (auto [a, b] : comp_edges[order[i]])
            out.block_of_edge_map[edge_key(g.p, a, b)] = static_cast<int>(i);
    }
    out.blocks = std::move(sorted_blocks);

    std::vector<int> block_count(g.p, 0);
    for (const auto& blk : out.blocks)
        for (Vertex v : blk) ++block_count[v];
    for (Vertex v = 0; v < g.p; ++v) {
        if (block_count[v] >= 2) {
            out.is_cut[v] = 1;
            out.cut_vertices.push_back(v);
        }
    }
    return out;
}

bool is_block_graph(const Graph& g, const BlockDecomposition& blocks) {
    if (!g.connected()) return false;
    for (const auto& blk : blocks.blocks) {
        for (size_t i = 0; i < blk.size(); ++i)
            for (size_t j = i + 1; j < blk.size(); ++j)
                if (!g.adjacent(blk[i], blk[j])) return false;
    }
    return true;
}

std::vector<Vertex> geodesic_path(const Graph& g, Vertex u, Vertex v) {
    std::vector<int> dist(g.p, -1);
    bfs_row(g, u, dist.data());
    if (dist[v] < 0) throw std::invalid_argument("vertices are in different components");
    std::vector<Vertex> rev{v};
    Vertex cur = v;
    while (cur != u) {
        Vertex pred = -1;
        for (Vertex w : g.adj[cur]) {
            if (dist[w] == dist[cur] - 1) {
                if (pred >= 0) throw std::logic_error("shortest path is not unique");
                pred = w;
            }
        }
        cur = pred;
        rev.push_back(cur);
    }
    std::reverse(rev.begin(), rev.end());
    return rev;
}

}  // namespace radio
