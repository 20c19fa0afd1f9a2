#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "radio/graph.hpp"
#include "radio/labeling.hpp"

namespace radio {

// Block graph built from a clique core K_m by attaching, level by level,
// k_i copies of K_{m_i} to every vertex of the previous level.
// m == 2 is rejected (the core would merge with level-1 blocks), and a
// single-vertex core needs k_1 >= 2 so the core vertex stays central.
struct LevelWiseRegularBlockSpec {
  int m = 1;
  std::vector<std::pair<int, int>> pairs;  // (k_i, m_i), m_i >= 2
};

// Path of h cliques K_n glued sequentially at single vertices.
struct PathOfCliquesSpec {
  int h = 1;
  int n = 2;
};

// Clique core K_m with k clique paths P_{h,n} hanging off each core vertex,
// glued at a path end. k >= 3 is required when m == 1.
struct ExtendedStarSpec {
  int m = 1;
  int k = 3;
  int h = 1;
  int n = 2;
};

struct TreePathSpec {
  int n = 2;
};

struct TreeStarSpec {
  int n = 3;  // leaves; the tree is K_{1,n}
};

// Complete m-ary tree of height h.
struct CompleteMArySpec {
  int h = 1;
  int m = 2;
};

// Tree in which every vertex at depth i < h has degree degrees[i] and all
// leaves sit at depth h. roots == 2 grows the same profile from both ends
// of a central edge.
struct LevelWiseRegularTreeSpec {
  int roots = 1;
  std::vector<int> degrees;
};

// n paths of length 2 hanging from a hub, with k-2 extra leaves on the far
// end of each path (equivalently a level-wise regular tree with degree
// profile (n, 2, k-1)).
struct BananaSpec {
  int n = 1;
  int k = 3;
};

// Path v_1..v_n with a star center attached to each v_i carrying k-2 leaves.
struct FirecrackerSpec {
  int n = 1;
  int k = 2;
};

// Spine of n-2 path vertices, each padded with leaves up to degree k.
struct CaterpillarSpec {
  int n = 3;
  int k = 3;
};

using FamilySpec =
    std::variant<LevelWiseRegularBlockSpec, PathOfCliquesSpec, ExtendedStarSpec,
                 TreePathSpec, TreeStarSpec, CompleteMArySpec,
                 LevelWiseRegularTreeSpec, BananaSpec, FirecrackerSpec,
                 CaterpillarSpec>;

struct NamedGraph {
  Graph graph;
  std::vector<std::string> names;  // names[v] is unique
};

// Builds the graph for a family instance. Throws std::invalid_argument when
// parameters are out of range.
NamedGraph generate(const FamilySpec& spec);

// The explicit span-optimal visiting order for the two block-graph families
// (clique core families above). Throws std::invalid_argument for the tree
// families, which have no closed-form ordering here.
VertexOrdering canonical_ordering(const FamilySpec& spec);

// Closed-form radio number for the two block-graph families; throws
// std::invalid_argument otherwise.
std::int64_t closed_form_rn(const FamilySpec& spec);

// Identifier used in JSON specs and CLI output.
std::string family_name(const FamilySpec& spec);

// Parses {"family": "...", ...} into a FamilySpec. Accepts the same names
// family_name produces. Throws std::invalid_argument on unknown families,
// missing or ill-typed parameters.
FamilySpec parse_family_spec(const std::string& json_text);

// Random connected block graph on p vertices: repeatedly glues a clique of
// size 2..max_clique onto a uniformly chosen existing vertex. Deterministic
// in the seed.
Graph random_block_graph(std::uint64_t seed, int p, int max_clique);

}  // namespace radio
