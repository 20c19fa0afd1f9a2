#include "radio/labeling.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>

namespace radio {

namespace {

void check_labels(const DistanceMatrix& dist, const std::vector<int64_t>& labels) {
    if (static_cast<int>(labels.size()) != dist.p)
        throw std::invalid_argument("label vector size does not match the graph");
    for (int64_t f : labels)
        if (f < 0) throw std::invalid_argument("labels must be nonnegative");
    for (int x : dist.d)
        if (x < 0) throw std::invalid_argument("graph is not connected");
}

bool violation_less(const RadioViolation& a, const RadioViolation& b) {
    return std::pair(a.u, a.v) < std::pair(b.u, b.v);
}

std::optional<RadioViolation> scan_row(const DistanceMatrix& dist,
                                       const std::vector<int64_t>& labels, int k, Vertex u) {
    for (Vertex v = u + 1; v < dist.p; ++v) {
        int64_t required = k + 1 - dist.at(u, v);
        if (required <= 0) continue;
        int64_t have = std::llabs(labels[u] - labels[v]);
        if (have < required) return RadioViolation{u, v, required, have};
    }
    return std::nullopt;
}

}  // namespace

std::optional<RadioViolation> validate_radio_serial(const DistanceMatrix& dist,
                                                    const std::vector<int64_t>& labels, int k) {
    check_labels(dist, labels);
    for (Vertex u = 0; u < dist.p; ++u)
        if (auto bad = scan_row(dist, labels, k, u)) return bad;
    return std::nullopt;
}

std::optional<RadioViolation> validate_radio(const DistanceMatrix& dist,
                                             const std::vector<int64_t>& labels, int k) {
    check_labels(dist, labels);
    std::optional<RadioViolation> best;
#pragma omp parallel
    {
        std::optional<RadioViolation> local;
#pragma omp for schedule(dynamic, 64) nowait
        for (Vertex u = 0; u < dist.p; ++u) {
            if (local && local->u < u) continue;
            if (auto bad = scan_row(dist, labels, k, u))
                if (!local || violation_less(*bad, *local)) local = bad;
        }
#pragma omp critical
        if (local && (!best || violation_less(*local, *best))) best = local;
    }
    return best;
}

int64_t lower_bound(const Analysis& a) {
    int d = a.dist.diameter;
    if (d < 2) throw std::invalid_argument("span bound needs diameter at least 2");
    int eps = a.centers.epsilon;
    return static_cast<int64_t>(a.g.p - 1) * (d + eps) - 2 * a.levels.total_level + eps;
}

namespace {

void check_permutation(int p, const VertexOrdering& ord) {
    if (static_cast<int>(ord.size()) != p)
        throw std::invalid_argument("ordering size does not match the graph");
    std::vector<char> seen(p, 0);
    for (Vertex v : ord) {
        if (v < 0 || v >= p || seen[v])
            throw std::invalid_argument("ordering is not a permutation of the vertices");
        seen[v] = 1;
    }
}

}  // namespace

RadioLabeling labeling_from_ordering(const Analysis& a, const VertexOrdering& ord) {
    check_permutation(a.g.p, ord);
    int d = a.dist.diameter;
    int eps = a.centers.epsilon;
    RadioLabeling out;
    out.labels.assign(a.g.p, 0);
    int64_t f = 0;
    for (size_t i = 1; i < ord.size(); ++i) {
        int64_t step = d + eps - a.levels.level[ord[i]] - a.levels.level[ord[i - 1]];
        if (step < 0)
            throw std::invalid_argument("negative label increment at position " +
                                        std::to_string(i));
        f += step;
        out.labels[ord[i]] = f;
    }
    out.span = f;
    return out;
}

RadioLabeling greedy_min_labeling(const DistanceMatrix& dist, const VertexOrdering& ord, int k) {
    check_permutation(dist.p, ord);
    RadioLabeling out;
    out.labels.assign(dist.p, 0);
    for (size_t i = 1; i < ord.size(); ++i) {
        int64_t f = out.labels[ord[i - 1]];
        for (size_t j = 0; j < i; ++j) {
            int64_t need = out.labels[ord[j]] + (k + 1 - dist.at(ord[j], ord[i]));
            f = std::max(f, need);
        }
        out.labels[ord[i]] = f;
    }
    if (!ord.empty()) out.span = out.labels[ord.back()];
    return out;
}

namespace {

struct Search {
    int p;
    int k;
    int64_t minc;
    std::vector<int> need;  // p*p, max(0, k+1-d)

    int64_t best = std::numeric_limits<int64_t>::max();
    std::vector<int64_t> best_labels;
    VertexOrdering best_order;

    std::vector<int64_t> f;
    VertexOrdering order;
    std::vector<char> used;

    Search(const DistanceMatrix& dist, int k_) : p(dist.p), k(k_) {
        need.assign(static_cast<size_t>(p) * p, 0);
        for (Vertex u = 0; u < p; ++u)
            for (Vertex v = 0; v < p; ++v)
                need[static_cast<size_t>(u) * p + v] = std::max(0, k + 1 - dist.at(u, v));
        minc = std::max(0, k + 1 - dist.diameter);
        f.assign(p, 0);
        used.assign(p, 0);
    }

    void dfs(int64_t last) {
        int pos = static_cast<int>(order.size());
        if (pos == p) {
            if (last < best) {
                best = last;
                best_labels = f;
                best_order = order;
            }
            return;
        }
        for (Vertex v = 0; v < p; ++v) {
            if (used[v]) continue;
            int64_t fv = last;
            for (Vertex u : order)
                fv = std::max(fv, f[u] + need[static_cast<size_t>(u) * p + v]);
            if (fv + (p - 1 - pos) * minc >= best) continue;
            used[v] = 1;
            order.push_back(v);
            f[v] = fv;
            dfs(fv);
            order.pop_back();
            used[v] = 0;
        }
    }

    void run_root(Vertex r) {
        used[r] = 1;
        order.push_back(r);
        f[r] = 0;
        dfs(0);
        order.pop_back();
        used[r] = 0;
    }
};

}  // namespace

ExactResult exact_radio_number(const Graph& g, const DistanceMatrix& dist,
                               const ExactOptions& opts) {
    if (g.p <= 0) throw std::invalid_argument("empty graph");
    if (dist.p != g.p)
        throw std::invalid_argument("distance matrix does not match the graph");
    if (g.p > opts.max_p)
        throw std::invalid_argument("exact search is limited to " + std::to_string(opts.max_p) +
                                    " vertices; got " + std::to_string(g.p));
    for (int x : dist.d)
        if (x < 0) throw std::invalid_argument("graph is not connected");
    int k = opts.k > 0 ? opts.k : dist.diameter;

    ExactResult res;
    if (g.p == 1) {
        res.labeling.labels = {0};
        res.ordering = {0};
        return res;
    }

    if (opts.threads > 1) {
        std::vector<Search> per_root(g.p, Search(dist, k));
#pragma omp parallel for schedule(dynamic) num_threads(opts.threads)
        for (Vertex r = 0; r < g.p; ++r) per_root[r].run_root(r);
        int pick = -1;
        for (Vertex r = 0; r < g.p; ++r)
            if (pick < 0 || per_root[r].best < per_root[pick].best) pick = r;
        const Search& s = per_root[pick];
        res.rn = s.best;
        res.labeling = {s.best_labels, s.best};
        res.ordering = s.best_order;
        return res;
    }

    Search s(dist, k);
    for (Vertex r = 0; r < g.p; ++r) s.run_root(r);
    res.rn = s.best;
    res.labeling = {s.best_labels, s.best};
    res.ordering = s.best_order;
    return res;
}

}  // namespace radio
