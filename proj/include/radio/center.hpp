#pragma once

#include <cstdint>
#include <vector>

#include "radio/graph.hpp"

namespace radio {

// Weight of a vertex is its total distance to all vertices. The weight
// centers W minimize it; they always sit inside a single block. When W is a
// single vertex that vertex alone is central, otherwise every vertex of the
// block spanned by W is central.
struct CenterInfo {
    std::vector<int64_t> wt;
    std::vector<Vertex> weight_centers;  // sorted
    int central_block = -1;              // block index when |W| >= 2, else -1
    std::vector<Vertex> central_vertices;
    std::vector<char> is_central;
    int epsilon = 0;  // 1 iff there is a unique weight center
};

CenterInfo compute_centers(const Graph& g, const DistanceMatrix& dist,
                           const BlockDecomposition& blocks);

// A branch hangs off one central vertex through one block at that vertex.
struct Branch {
    Vertex anchor;
    int block;
};

struct LevelStructure {
    std::vector<int> level;      // distance to the nearest central vertex
    int64_t total_level = 0;     // sum over all vertices
    std::vector<Vertex> anchor;  // nearest central vertex; self for central ones
    std::vector<Vertex> parent;  // predecessor towards the anchor, -1 for central
    std::vector<int> branch_of;  // branch index, -1 for central vertices
    std::vector<Branch> branches;
};

// Requires a connected block graph; the nearest central vertex and the
// predecessor towards it are then unique for every vertex.
LevelStructure levels_and_branches(const Graph& g, const BlockDecomposition& blocks,
                                   const CenterInfo& centers);

struct Analysis {
    Graph g;
    DistanceMatrix dist;
    BlockDecomposition blocks;
    CenterInfo centers;
    LevelStructure levels;
};

// Throws std::invalid_argument unless g is a connected block graph.
Analysis analyze(const Graph& g);

// Geodesic shape parameters of a vertex pair:
//   phi   deepest common point of the two chains down from the anchors
//         (only nonzero for vertices in the same branch),
//   delta 1 when the geodesic crosses two central vertices,
//   rho   1 when the geodesic skips past the common point through a block edge.
// They satisfy d(u,v) = L(u) + L(v) + delta - 2*phi - rho for all u != v.
struct GeoParams {
    int phi;
    int delta;
    int rho;
};

GeoParams geo_params(const Analysis& a, Vertex u, Vertex v);
int distance_by_formula(const Analysis& a, Vertex u, Vertex v);

}  // namespace radio
