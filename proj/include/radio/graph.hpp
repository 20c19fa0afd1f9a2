#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace radio {

using Vertex = int;

// Simple undirected graph on vertices 0..p-1 with sorted adjacency lists.
struct Graph {
    int p = 0;
    std::vector<std::vector<Vertex>> adj;

    bool adjacent(Vertex u, Vertex v) const;
    int degree(Vertex v) const { return static_cast<int>(adj[v].size()); }
    long long edge_count() const;
    bool connected() const;
};

Graph graph_from_edges(int p, const std::vector<std::pair<Vertex, Vertex>>& edges);

// Text format: first data line is the vertex count, then one "u v" pair per
// line. Blank lines and '#' comments are skipped. Throws std::invalid_argument
// on malformed input, out-of-range ids, self loops or repeated edges.
Graph parse_graph(std::istream& in);
Graph parse_graph_string(const std::string& text);
std::string format_graph(const Graph& g);

struct DistanceMatrix {
    int p = 0;
    std::vector<int> d;  // row-major p*p
    int diameter = 0;

    int at(Vertex u, Vertex v) const { return d[static_cast<size_t>(u) * p + v]; }
};

// BFS from every source. The parallel version splits sources across OpenMP
// threads; the serial one is the reference used by tests and benchmarks.
DistanceMatrix all_pairs_distances(const Graph& g);
DistanceMatrix all_pairs_distances_serial(const Graph& g);

struct BlockDecomposition {
    std::vector<std::vector<Vertex>> blocks;  // each sorted; singleton graph has none
    std::vector<char> is_cut;                 // size p
    std::vector<Vertex> cut_vertices;         // sorted
    std::unordered_map<int64_t, int> block_of_edge_map;

    int block_of_edge(Vertex u, Vertex v) const;
    std::vector<int> blocks_at(Vertex v) const;  // indices of blocks containing v
};

BlockDecomposition block_decomposition(const Graph& g);

// True when the graph is connected and every block induces a clique.
bool is_block_graph(const Graph& g, const BlockDecomposition& blocks);

// Unique shortest u..v path, inclusive of endpoints. Throws std::logic_error
// if the shortest path is not unique (cannot happen in a block graph).
std::vector<Vertex> geodesic_path(const Graph& g, Vertex u, Vertex v);

}  // namespace radio
