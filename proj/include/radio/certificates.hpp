#pragma once

#include <optional>
#include <string>

#include "radio/center.hpp"
#include "radio/labeling.hpp"

namespace radio {

struct PairRef {
    int i, j;  // positions in the ordering
};

// Span-floor ordering conditions:
//   (a) the end vertices satisfy L(u_0) + L(u_{p-1}) = eps,
//   (b) every consecutive pair of non-central vertices has rho = phi = 0 and
//       delta = 1 - eps (pairs touching a central vertex pass),
//   (c) the consecutive-difference labeling is a valid radio labeling.
struct ThmLbReport {
    bool cond_a = false;
    bool cond_b = false;
    bool cond_c = false;
    std::optional<int> b_fail_pos;               // first i with (u_i, u_{i+1}) failing (b)
    std::optional<int> c_fail_pos;               // position of a negative increment
    std::optional<RadioViolation> c_violation;   // radio condition failure, if any
    std::optional<RadioLabeling> labeling;       // built when increments are nonnegative
};

ThmLbReport check_thm_lb(const Analysis& a, const VertexOrdering& ord);

// Cumulative form of the same conditions: for every i < j,
//   d(u_i, u_j) >= sum_{t=i}^{j-1} (L(u_t) + L(u_{t+1})) - (j-i)(d+eps) + d + 1.
// Returns the lexicographically first violated pair. The parallel version
// reduces to the same pair as the serial scan.
std::optional<PairRef> check_eq_dij(const Analysis& a, const VertexOrdering& ord);
std::optional<PairRef> check_eq_dij_serial(const Analysis& a, const VertexOrdering& ord);

// Position-local tests:
//   (a*) 2 L(u_i) <= d + eps for every i,
//   (b*) 2 phi(u_i, u_j) <= (j-i-1)(d+eps) - 2 sum_{t=i+1}^{j-1} L(u_t) - (1-eps)
//        for every same-branch pair i < j.
struct Main2Report {
    bool a_star = false;
    bool b_star = false;
    std::optional<int> a_fail_pos;
    std::optional<PairRef> b_fail_pair;
};

Main2Report check_main2(const Analysis& a, const VertexOrdering& ord);

// Three independent strengthenings that each certify an ordering already
// satisfying (a) and (b); throws std::invalid_argument when (a) or (b) fails.
struct SufficientReport {
    bool short_consecutive = false;  // 2 min(d_i, d_{i+1}) <= d + 1 - eps
    bool bounded_steps = false;      // 2 d_i <= d + 1 + eps
    bool spread_branches = false;    // 2 L(u_i) <= d + eps and same-branch gaps >= d
};

SufficientReport check_sufficient(const Analysis& a, const VertexOrdering& ord);

struct CertificateReport {
    int64_t lb = 0;
    bool cond_a = false, cond_b = false, cond_c = false;
    bool eq_dij_ok = false;
    bool a_star = false, b_star = false;
    std::optional<SufficientReport> sufficient;  // evaluated when (a) and (b) hold
    bool certified = false;                      // (a), (b) and (c) all hold
    std::string reason;
    std::optional<int64_t> span;
    std::optional<RadioLabeling> labeling;
};

// Evaluates every test for the ordering. The per-ordering equivalence of
// [(a),(b),(c)] with [(a) + cumulative inequalities] is asserted internally;
// a mismatch throws std::logic_error. When certified, the attached labeling
// meets the span floor exactly, so rn(G) equals the floor.
CertificateReport certify(const Analysis& a, const VertexOrdering& ord);

}  // namespace radio
