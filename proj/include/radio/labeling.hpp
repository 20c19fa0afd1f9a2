#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "radio/center.hpp"
#include "radio/graph.hpp"

namespace radio {

using VertexOrdering = std::vector<Vertex>;

struct RadioLabeling {
    std::vector<int64_t> labels;
    int64_t span = 0;
};

struct RadioViolation {
    Vertex u, v;
    int64_t required;  // k + 1 - d(u,v)
    int64_t have;      // |f(u) - f(v)|
};

// Checks |f(u) - f(v)| >= k + 1 - d(u,v) for all pairs and reports the first
// offending pair in lexicographic order, or nullopt when the labeling is
// valid. Labels must be nonnegative and the graph connected. The parallel
// version splits rows across threads and reduces to the same pair.
std::optional<RadioViolation> validate_radio(const DistanceMatrix& dist,
                                             const std::vector<int64_t>& labels, int k);
std::optional<RadioViolation> validate_radio_serial(const DistanceMatrix& dist,
                                                    const std::vector<int64_t>& labels, int k);

// Span floor (p-1)(d+eps) - 2L(G) + eps for diameter at least 2.
int64_t lower_bound(const Analysis& a);

// Consecutive-difference construction: f(u_0) = 0 and
// f(u_{i+1}) = f(u_i) + d + eps - L(u_{i+1}) - L(u_i).
// Throws std::invalid_argument if ord is not a permutation or some increment
// is negative (the position is named in the message).
RadioLabeling labeling_from_ordering(const Analysis& a, const VertexOrdering& ord);

// Smallest labels consistent with the radio condition when assigned in the
// given order with nondecreasing values.
RadioLabeling greedy_min_labeling(const DistanceMatrix& dist, const VertexOrdering& ord, int k);

struct ExactOptions {
    int max_p = 10;
    int k = 0;        // <= 0 means use the diameter
    int threads = 1;  // > 1 searches roots in parallel
};

struct ExactResult {
    int64_t rn = 0;
    RadioLabeling labeling;
    VertexOrdering ordering;  // vertices by increasing label
};

// Branch and bound over label-sorted vertex orders. Deterministic: among all
// optimal labelings it returns the first one reached by the fixed search
// order, independent of the thread count.
ExactResult exact_radio_number(const Graph& g, const DistanceMatrix& dist,
                               const ExactOptions& opts = {});

}  // namespace radio
