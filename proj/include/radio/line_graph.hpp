#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "radio/families.hpp"
#include "radio/graph.hpp"
#include "radio/labeling.hpp"

namespace radio {

// Line graph of a tree. Rooting the tree at a weight center names every edge
// after its child endpoint, so line vertices correspond exactly to the
// non-root tree vertices.
struct LineGraphOfTree {
    Graph graph;  // the line graph
    Graph tree;
    Vertex root = -1;                 // naming root (smaller id when two centers)
    std::vector<Vertex> name_of;      // line vertex -> tree vertex
    std::vector<int> lg_of;           // tree vertex -> line vertex, -1 at the root
    std::vector<Vertex> tree_parent;  // parent towards the root, -1 at the root
};

// Requires a tree on at least 3 vertices. The second form roots at a chosen
// weight center instead of the smallest one.
LineGraphOfTree line_graph_of_tree(const Graph& tree);
LineGraphOfTree line_graph_of_tree(const Graph& tree, Vertex root);

// The line-graph vertices {w} + tree descendants of w, where w is the unique
// weight center of the line graph viewed as a tree vertex. Defined only when
// the tree and the line graph both have unique weight centers.
std::vector<Vertex> b_subgraph(const LineGraphOfTree& lt);

// Structural identities between a tree and its line graph: sizes and
// diameter drop by one; pairwise distances keep or drop by one depending on
// the descendant relation; vertex levels shift by the center configuration;
// and the total level shifts accordingly.
struct LineObsReport {
    bool sizes = false;
    bool distances = false;
    bool levels = false;
    bool total_level = false;
    bool all() const { return sizes && distances && levels && total_level; }
};

LineObsReport line_obs_check(const LineGraphOfTree& lt);

struct TransferReport {
    // line4-i | line4-ii | line4-iii | reverse-2centers | reverse-odd-p |
    // reverse-multi-center | none
    std::string applicable_case;
    std::string detail;
    bool ok = false;         // construction succeeded with the expected span
    bool certified = false;  // target ordering passed the span-floor certificate
    VertexOrdering ordering; // in target-graph vertex ids
    std::optional<RadioLabeling> labeling;
    std::optional<std::int64_t> span;
    std::optional<std::int64_t> expected_span;
};

// Turns an ordering certifying the tree's span floor into one for the line
// graph (span drops by d(T) - 1 + eps(T)). Throws std::invalid_argument when
// the supplied ordering does not certify the tree.
TransferReport transfer_to_line(const LineGraphOfTree& lt,
                                const VertexOrdering& tree_ord);

// Turns an ordering certifying the line graph's span floor into one for the
// tree (span grows by d(T) - 1 or d(L) + 1 by case). Throws
// std::invalid_argument when the ordering does not certify the line graph.
TransferReport transfer_to_tree(const LineGraphOfTree& lt,
                                const VertexOrdering& line_ord);

// Closed-form radio number of the line graph for banana, firecracker and
// level-wise regular trees (complete m-ary trees are accepted as the special
// case they are). Throws std::invalid_argument for other families or
// out-of-range parameters.
std::int64_t corollary_rn(const FamilySpec& family);

}  // namespace radio
