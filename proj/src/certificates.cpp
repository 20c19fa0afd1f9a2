#include "radio/certificates.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace radio {

namespace {

void check_ordering(const Analysis& a, const VertexOrdering& ord) {
    if (static_cast<int>(ord.size()) != a.g.p)
        throw std::invalid_argument("ordering size does not match the graph");
    std::vector<char> seen(a.g.p, 0);
    for (Vertex v : ord) {
        if (v < 0 || v >= a.g.p || seen[v])
            throw std::invalid_argument("ordering is not a permutation of the vertices");
        seen[v] = 1;
    }
}

// Levels of ordering positions plus prefix sums of consecutive-level sums.
struct OrderLevels {
    std::vector<int64_t> lv;
    std::vector<int64_t> pre;  // pre[t] = sum_{s<t} (lv[s] + lv[s+1])

    explicit OrderLevels(const Analysis& a, const VertexOrdering& ord) {
        int p = a.g.p;
        lv.resize(p);
        for (int i = 0; i < p; ++i) lv[i] = a.levels.level[ord[i]];
        pre.assign(p, 0);
        for (int t = 0; t + 1 < p; ++t) pre[t + 1] = pre[t] + lv[t] + lv[t + 1];
    }
};

}  // namespace

ThmLbReport check_thm_lb(const Analysis& a, const VertexOrdering& ord) {
    check_ordering(a, ord);
    int p = a.g.p;
    int eps = a.centers.epsilon;
    ThmLbReport rep;

    rep.cond_a = a.levels.level[ord.front()] + a.levels.level[ord.back()] == eps;

    rep.cond_b = true;
    for (int i = 0; i + 1 < p; ++i) {
        Vertex u = ord[i], v = ord[i + 1];
        if (a.centers.is_central[u] || a.centers.is_central[v]) continue;
        GeoParams gp = geo_params(a, u, v);
        if (gp.rho != 0 || gp.phi != 0 || gp.delta != 1 - eps) {
            rep.cond_b = false;
            rep.b_fail_pos = i;
            break;
        }
    }

    try {
        RadioLabeling lab = labeling_from_ordering(a, ord);
        rep.c_violation = validate_radio(a.dist, lab.labels, a.dist.diameter);
        rep.cond_c = !rep.c_violation.has_value();
        rep.labeling = std::move(lab);
    } catch (const std::invalid_argument&) {
        rep.cond_c = false;
        for (int i = 0; i + 1 < p; ++i) {
            if (a.dist.diameter + eps - a.levels.level[ord[i]] - a.levels.level[ord[i + 1]] < 0) {
                rep.c_fail_pos = i + 1;
                break;
            }
        }
    }
    return rep;
}

namespace {

std::optional<PairRef> eq_dij_row(const Analysis& a, const VertexOrdering& ord,
                                  const OrderLevels& ol, int i) {
    int p = a.g.p;
    int64_t de = a.dist.diameter + a.centers.epsilon;
    for (int j = i + 1; j < p; ++j) {
        int64_t rhs = ol.pre[j] - ol.pre[i] - (j - i) * de + a.dist.diameter + 1;
        if (a.dist.at(ord[i], ord[j]) < rhs) return PairRef{i, j};
    }
    return std::nullopt;
}

}  // namespace

std::optional<PairRef> check_eq_dij_serial(const Analysis& a, const VertexOrdering& ord) {
    check_ordering(a, ord);
    OrderLevels ol(a, ord);
    for (int i = 0; i + 1 < a.g.p; ++i)
        if (auto bad = eq_dij_row(a, ord, ol, i)) return bad;
    return std::nullopt;
}

std::optional<PairRef> check_eq_dij(const Analysis& a, const VertexOrdering& ord) {
    check_ordering(a, ord);
    OrderLevels ol(a, ord);
    int p = a.g.p;
    std::optional<PairRef> best;
#pragma omp parallel
    {
        std::optional<PairRef> local;
#pragma omp for schedule(dynamic, 64) nowait
        for (int i = 0; i < p - 1; ++i) {
            if (local && local->i < i) continue;
            if (auto bad = eq_dij_row(a, ord, ol, i))
                if (!local || std::pair(bad->i, bad->j) < std::pair(local->i, local->j))
                    local = bad;
        }
#pragma omp critical
        if (local && (!best || std::pair(local->i, local->j) < std::pair(best->i, best->j)))
            best = local;
    }
    return best;
}

Main2Report check_main2(const Analysis& a, const VertexOrdering& ord) {
    check_ordering(a, ord);
    int p = a.g.p;
    int eps = a.centers.epsilon;
    int64_t de = a.dist.diameter + eps;
    Main2Report rep;

    rep.a_star = true;
    for (int i = 0; i < p; ++i) {
        if (2 * static_cast<int64_t>(a.levels.level[ord[i]]) > de) {
            rep.a_star = false;
            rep.a_fail_pos = i;
            break;
        }
    }

    std::vector<int64_t> lpre(p + 1, 0);
    for (int i = 0; i < p; ++i) lpre[i + 1] = lpre[i] + a.levels.level[ord[i]];

    rep.b_star = true;
    for (int i = 0; i < p && rep.b_star; ++i) {
        int bi = a.levels.branch_of[ord[i]];
        if (bi < 0) continue;
        for (int j = i + 1; j < p; ++j) {
            if (a.levels.branch_of[ord[j]] != bi) continue;
            int64_t mid = lpre[j] - lpre[i + 1];
            int64_t rhs = (j - i - 1) * de - 2 * mid - (1 - eps);
            if (2 * static_cast<int64_t>(geo_params(a, ord[i], ord[j]).phi) > rhs) {
                rep.b_star = false;
                rep.b_fail_pair = PairRef{i, j};
                break;
            }
        }
    }
    return rep;
}

SufficientReport check_sufficient(const Analysis& a, const VertexOrdering& ord) {
    ThmLbReport base = check_thm_lb(a, ord);
    if (!base.cond_a || !base.cond_b)
        throw std::invalid_argument(
            "sufficient-condition tests apply only when conditions (a) and (b) hold");
    int p = a.g.p;
    int eps = a.centers.epsilon;
    int d = a.dist.diameter;
    SufficientReport rep;

    std::vector<int> step(p - 1);
    for (int i = 0; i + 1 < p; ++i) step[i] = a.dist.at(ord[i], ord[i + 1]);

    rep.short_consecutive = true;
    for (int i = 0; i + 2 < p; ++i)
        if (2 * std::min(step[i], step[i + 1]) > d + 1 - eps) {
            rep.short_consecutive = false;
            break;
        }

    rep.bounded_steps = true;
    for (int i = 0; i + 1 < p; ++i)
        if (2 * step[i] > d + 1 + eps) {
            rep.bounded_steps = false;
            break;
        }

    rep.spread_branches = true;
    for (int i = 0; i < p && rep.spread_branches; ++i) {
        if (2 * a.levels.level[ord[i]] > d + eps) {
            rep.spread_branches = false;
            break;
        }
        int bi = a.levels.branch_of[ord[i]];
        if (bi < 0) continue;
        for (int j = i + 1; j < p; ++j) {
            if (a.levels.branch_of[ord[j]] == bi && j - i < d) {
                rep.spread_branches = false;
                break;
            }
        }
    }
    return rep;
}

CertificateReport certify(const Analysis& a, const VertexOrdering& ord) {
    CertificateReport rep;
    rep.lb = lower_bound(a);

    ThmLbReport thm = check_thm_lb(a, ord);
    rep.cond_a = thm.cond_a;
    rep.cond_b = thm.cond_b;
    rep.cond_c = thm.cond_c;
    rep.labeling = thm.labeling;
    if (rep.labeling) rep.span = rep.labeling->span;

    auto eq_bad = check_eq_dij(a, ord);
    rep.eq_dij_ok = !eq_bad.has_value();

    bool route1 = thm.cond_a && thm.cond_b && thm.cond_c;
    bool route2 = thm.cond_a && rep.eq_dij_ok;
    if (route1 != route2)
        throw std::logic_error("certificate routes disagree: conditions (a)(b)(c) say " +
                               std::string(route1 ? "yes" : "no") +
                               " but the cumulative inequalities say " +
                               std::string(route2 ? "yes" : "no"));

    Main2Report m2 = check_main2(a, ord);
    rep.a_star = m2.a_star;
    rep.b_star = m2.b_star;
    if (thm.cond_a && thm.cond_b) rep.sufficient = check_sufficient(a, ord);

    rep.certified = route1;
    if (rep.certified) {
        if (!rep.span || *rep.span != rep.lb)
            throw std::logic_error("certified labeling misses the span floor");
        rep.reason = "ordering certifies that the radio number meets the span floor";
    } else if (!thm.cond_a) {
        rep.reason = "condition (a) fails: end levels sum to " +
                     std::to_string(a.levels.level[ord.front()] + a.levels.level[ord.back()]) +
                     ", need " + std::to_string(a.centers.epsilon);
    } else if (!thm.cond_b) {
        rep.reason = "condition (b) fails at position " + std::to_string(*thm.b_fail_pos);
    } else if (thm.c_fail_pos) {
        rep.reason = "condition (c) fails: negative increment at position " +
                     std::to_string(*thm.c_fail_pos);
    } else {
        rep.reason = "condition (c) fails: labels " + std::to_string(thm.c_violation->u) +
                     " and " + std::to_string(thm.c_violation->v) + " differ by " +
                     std::to_string(thm.c_violation->have) + ", need " +
                     std::to_string(thm.c_violation->required);
    }
    return rep;
}

}  // namespace radio
