#include "radio/line_graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "radio/center.hpp"
#include "radio/certificates.hpp"

namespace radio {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}

void check_tree(const Graph& g) {
    require(g.p >= 3, "line graph construction needs a tree on at least 3 vertices");
    require(g.connected() && g.edge_count() == g.p - 1, "input graph is not a tree");
}

// Ancestor queries in the rooted tree via preorder intervals.
struct AncestorOracle {
    std::vector<int> tin, tout;

    AncestorOracle(const Graph& tree, Vertex root, const std::vector<Vertex>& parent)
        : tin(tree.p, 0), tout(tree.p, 0) {
        std::vector<std::vector<Vertex>> children(tree.p);
        for (Vertex v = 0; v < tree.p; ++v)
            if (parent[v] >= 0) children[parent[v]].push_back(v);
        int clock = 0;
        // iterative DFS; second visit closes the interval
        std::vector<std::pair<Vertex, bool>> stack{{root, false}};
        while (!stack.empty()) {
            auto [v, closing] = stack.back();
            stack.pop_back();
            if (closing) {
                tout[v] = clock;
                continue;
            }
            tin[v] = clock++;
            stack.emplace_back(v, true);
            for (Vertex c : children[v]) stack.emplace_back(c, false);
        }
    }

    bool is_ancestor(Vertex u, Vertex v) const {  // proper: u != v
        return u != v && tin[u] <= tin[v] && tin[v] < tout[u];
    }
    bool related(Vertex u, Vertex v) const {
        return is_ancestor(u, v) || is_ancestor(v, u);
    }
};

std::vector<Vertex> weight_centers_of(const Graph& g) {
    DistanceMatrix dist = all_pairs_distances(g);
    std::vector<int64_t> wt(g.p, 0);
    for (Vertex u = 0; u < g.p; ++u)
        for (Vertex v = 0; v < g.p; ++v) wt[u] += dist.at(u, v);
    int64_t best = *std::min_element(wt.begin(), wt.end());
    std::vector<Vertex> w;
    for (Vertex u = 0; u < g.p; ++u)
        if (wt[u] == best) w.push_back(u);
    return w;
}

LineGraphOfTree build(const Graph& tree, Vertex root) {
    LineGraphOfTree lt;
    lt.tree = tree;
    lt.root = root;
    const int p = tree.p;

    lt.tree_parent.assign(p, -1);
    std::vector<char> seen(p, 0);
    std::vector<Vertex> queue{root};
    seen[root] = 1;
    for (size_t head = 0; head < queue.size(); ++head) {
        Vertex u = queue[head];
        for (Vertex v : tree.adj[u])
            if (!seen[v]) {
                seen[v] = 1;
                lt.tree_parent[v] = u;
                queue.push_back(v);
            }
    }

    lt.lg_of.assign(p, -1);
    lt.name_of.reserve(p - 1);
    for (Vertex v = 0; v < p; ++v)
        if (v != root) {
            lt.lg_of[v] = static_cast<int>(lt.name_of.size());
            lt.name_of.push_back(v);
        }

    // Two tree edges are adjacent exactly when they share an endpoint, so the
    // edges incident to each tree vertex form a clique.
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::vector<std::vector<Vertex>> children(p);
    for (Vertex v = 0; v < p; ++v)
        if (lt.tree_parent[v] >= 0) children[lt.tree_parent[v]].push_back(v);
    for (Vertex u = 0; u < p; ++u) {
        std::vector<int> incident;
        if (u != root) incident.push_back(lt.lg_of[u]);
        for (Vertex c : children[u]) incident.push_back(lt.lg_of[c]);
        for (size_t i = 0; i < incident.size(); ++i)
            for (size_t j = i + 1; j < incident.size(); ++j)
                edges.emplace_back(incident[i], incident[j]);
    }
    lt.graph = graph_from_edges(p - 1, edges);

    // Every cut vertex of the line graph joins exactly the cliques of its two
    // tree endpoints.
    BlockDecomposition lb = block_decomposition(lt.graph);
    for (Vertex x : lb.cut_vertices)
        if (lb.blocks_at(x).size() != 2)
            throw std::logic_error("line-graph cut vertex is not on exactly two blocks");

    return lt;
}

}  // namespace

LineGraphOfTree line_graph_of_tree(const Graph& tree) {
    check_tree(tree);
    std::vector<Vertex> w = weight_centers_of(tree);
    LineGraphOfTree lt = build(tree, w.front());
    if (w.size() == 2 && weight_centers_of(lt.graph).size() != 1)
        throw std::logic_error("two tree centers must give a unique line-graph center");
    return lt;
}

LineGraphOfTree line_graph_of_tree(const Graph& tree, Vertex root) {
    check_tree(tree);
    std::vector<Vertex> w = weight_centers_of(tree);
    require(std::find(w.begin(), w.end(), root) != w.end(),
            "naming root must be a weight center of the tree");
    return build(tree, root);
}

std::vector<Vertex> b_subgraph(const LineGraphOfTree& lt) {
    std::vector<Vertex> wt = weight_centers_of(lt.tree);
    Analysis al = analyze(lt.graph);
    if (wt.size() != 1 || al.centers.weight_centers.size() != 1)
        throw std::invalid_argument("B(T) undefined for this center configuration");

    Vertex w_lg = al.centers.weight_centers[0];
    Vertex w = lt.name_of[w_lg];

    std::vector<std::vector<Vertex>> children(lt.tree.p);
    for (Vertex v = 0; v < lt.tree.p; ++v)
        if (lt.tree_parent[v] >= 0) children[lt.tree_parent[v]].push_back(v);

    std::vector<Vertex> out;
    std::vector<Vertex> stack{w};
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        out.push_back(lt.lg_of[v]);
        for (Vertex c : children[v]) stack.push_back(c);
    }
    std::sort(out.begin(), out.end());

    if (static_cast<int>(out.size()) > (lt.tree.p - 1) / 2)
        throw std::logic_error("B(T) exceeds half the tree edges");

    // Removing the line-graph center must leave B - w on one branch and the
    // rest on another.
    std::vector<char> inside(al.g.p, 0);
    for (Vertex x : out) inside[x] = 1;
    int branch_in = -2, branch_out = -2;
    bool split = true;
    for (Vertex x = 0; x < al.g.p; ++x) {
        if (x == w_lg) continue;
        int b = al.levels.branch_of[x];
        int& slot = inside[x] ? branch_in : branch_out;
        if (slot == -2)
            slot = b;
        else if (slot != b)
            split = false;
    }
    if (branch_in != -2 && branch_in == branch_out) split = false;
    if (!split) throw std::logic_error("line graph does not split into the two expected branches");

    return out;
}

LineObsReport line_obs_check(const LineGraphOfTree& lt) {
    LineObsReport rep;
    Analysis at = analyze(lt.tree);
    Analysis al = analyze(lt.graph);
    const int p = lt.tree.p;
    const int q = al.g.p;
    const size_t wtc = at.centers.weight_centers.size();
    const size_t wlc = al.centers.weight_centers.size();

    rep.sizes = (q == p - 1) && (al.dist.diameter == at.dist.diameter - 1);

    AncestorOracle anc(lt.tree, lt.root, lt.tree_parent);
    rep.distances = true;
    for (int x = 0; x < q && rep.distances; ++x)
        for (int y = x + 1; y < q; ++y) {
            Vertex u = lt.name_of[x], v = lt.name_of[y];
            int expect = at.dist.at(u, v) - (anc.related(u, v) ? 0 : 1);
            if (al.dist.at(x, y) != expect) {
                rep.distances = false;
                break;
            }
        }

    std::vector<char> inside(q, 0);
    int64_t b_size = 0;
    if (wtc == 1 && wlc == 1) {
        for (Vertex x : b_subgraph(lt)) inside[x] = 1;
        b_size = std::count(inside.begin(), inside.end(), 1);
    }
    rep.levels = true;
    for (int x = 0; x < q; ++x) {
        int expect = at.levels.level[lt.name_of[x]];
        if (wtc == 1 && wlc == 1)
            expect -= inside[x] ? 1 : 0;
        else if (wlc >= 2)
            expect -= 1;
        if (al.levels.level[x] != expect) {
            rep.levels = false;
            break;
        }
    }

    int64_t expect_total = at.levels.total_level;
    if (wtc == 1 && wlc == 1)
        expect_total -= b_size;
    else if (wtc == 1 && wlc > 1)
        expect_total -= p - 1;
    rep.total_level = (al.levels.total_level == expect_total);

    return rep;
}

namespace {

// Certify when the span floor exists, otherwise just check the radio
// condition against the expected span.
void finish_transfer(TransferReport& rep, const Analysis& target, const VertexOrdering& ord) {
    rep.ordering = ord;
    if (target.dist.diameter >= 2) {
        CertificateReport cr = certify(target, ord);
        rep.certified = cr.certified;
        rep.span = cr.span;
        rep.labeling = cr.labeling;
        if (!cr.certified)
            rep.detail = "constructed ordering fails the certificate: " + cr.reason;
        else if (rep.span != rep.expected_span)
            rep.detail = "certified span differs from the expected one";
        else
            rep.ok = true;
    } else {
        try {
            RadioLabeling lab = labeling_from_ordering(target, ord);
            rep.span = lab.span;
            rep.labeling = std::move(lab);
            auto bad = validate_radio(target.dist, rep.labeling->labels, target.dist.diameter);
            if (bad)
                rep.detail = "constructed labeling violates the radio condition";
            else if (rep.span != rep.expected_span)
                rep.detail = "labeling span differs from the expected one";
            else
                rep.ok = true;
        } catch (const std::invalid_argument& e) {
            rep.detail = std::string("constructed ordering has no labeling: ") + e.what();
        }
    }
}

}  // namespace

TransferReport transfer_to_line(const LineGraphOfTree& lt, const VertexOrdering& tree_ord) {
    Analysis at = analyze(lt.tree);
    CertificateReport ct = certify(at, tree_ord);
    if (!ct.certified)
        throw std::invalid_argument("ordering does not certify the tree span floor: " + ct.reason);

    Analysis al = analyze(lt.graph);
    const int p = lt.tree.p;
    const auto& wt = at.centers.weight_centers;
    const auto& wl = al.centers.weight_centers;

    TransferReport rep;
    rep.expected_span = *ct.span - at.dist.diameter + 1 - at.centers.epsilon;

    VertexOrdering ord = tree_ord;
    VertexOrdering lg;
    auto level_of = [&](Vertex v) { return at.levels.level[v]; };

    if (wt.size() == 2) {
        rep.applicable_case = "line4-iii";
        // both ends are centers; want a level-1 vertex right before the closing one
        if (level_of(ord[p - 2]) != 1) std::reverse(ord.begin(), ord.end());
        if (level_of(ord[p - 2]) != 1) {
            rep.applicable_case = "none";
            rep.detail = "neither orientation puts a level-1 vertex before the closing center";
            return rep;
        }
        Vertex mid = (wt[0] == lt.root) ? wt[1] : wt[0];  // names the edge between the centers
        lg.push_back(lt.lg_of[mid]);
        for (int i = 1; i <= p - 2; ++i) lg.push_back(lt.lg_of[ord[i]]);
    } else if (wl.size() > 1) {
        rep.applicable_case = "line4-ii";
        if (ord.front() == wt[0]) std::reverse(ord.begin(), ord.end());
        if (level_of(ord[p - 2]) != 1) {
            rep.applicable_case = "none";
            rep.detail = "the vertex before the center has level " +
                         std::to_string(level_of(ord[p - 2])) + ", need 1";
            return rep;
        }
        for (int i = 0; i <= p - 2; ++i) lg.push_back(lt.lg_of[ord[i]]);
    } else {
        rep.applicable_case = "line4-i";
        if (p % 2 == 0) {
            rep.applicable_case = "none";
            rep.detail = "needs an odd number of tree vertices";
            return rep;
        }
        std::vector<Vertex> b = b_subgraph(lt);
        if (static_cast<int>(b.size()) != (p - 1) / 2) {
            rep.applicable_case = "none";
            rep.detail = "B(T) has " + std::to_string(b.size()) + " vertices, need " +
                         std::to_string((p - 1) / 2);
            return rep;
        }
        if (ord.back() == wt[0]) std::reverse(ord.begin(), ord.end());
        Vertex w_lg = wl[0];
        if (lt.lg_of[ord[p - 1]] != w_lg) {
            rep.applicable_case = "none";
            rep.detail = "the ordering does not end at the edge naming the line-graph center";
            return rep;
        }
        if (level_of(ord[p - 2]) != 1) {
            rep.applicable_case = "none";
            rep.detail = "the vertex before the final edge has level " +
                         std::to_string(level_of(ord[p - 2])) + ", need 1";
            return rep;
        }
        lg.push_back(w_lg);
        for (int i = 1; i <= p - 2; ++i) lg.push_back(lt.lg_of[ord[i]]);
    }

    finish_transfer(rep, al, lg);
    return rep;
}

TransferReport transfer_to_tree(const LineGraphOfTree& lt, const VertexOrdering& line_ord) {
    Analysis al = analyze(lt.graph);
    CertificateReport cl = certify(al, line_ord);
    if (!cl.certified)
        throw std::invalid_argument("ordering does not certify the line-graph span floor: " +
                                    cl.reason);

    Analysis at = analyze(lt.tree);
    const auto& wt = at.centers.weight_centers;
    const auto& wl = al.centers.weight_centers;
    const int dl = al.dist.diameter;

    TransferReport rep;
    VertexOrdering ord = line_ord;
    VertexOrdering tord;

    if (wt.size() == 2) {
        rep.applicable_case = "reverse-2centers";
        rep.expected_span = *cl.span + at.dist.diameter - 1;
        Vertex wc = wl[0];
        if (ord.back() == wc) std::reverse(ord.begin(), ord.end());
        if (ord.front() != wc) {
            rep.applicable_case = "none";
            rep.detail = "no end of the ordering is the line-graph center";
            return rep;
        }
        // the new tree ends are the centers opposite the sides the ordering
        // leaves first and last
        Vertex first_side = at.levels.anchor[lt.name_of[ord[1]]];
        Vertex last_side = at.levels.anchor[lt.name_of[ord.back()]];
        if (first_side == last_side) {
            rep.applicable_case = "none";
            rep.detail = "the vertices next to the center edge hang off the same side";
            return rep;
        }
        tord.push_back(last_side);
        for (size_t i = 1; i < ord.size(); ++i) tord.push_back(lt.name_of[ord[i]]);
        tord.push_back(first_side);
    } else if (wl.size() == 1) {
        if (lt.tree.p % 2 == 0) {
            rep.applicable_case = "none";
            rep.detail = "no reverse construction for an even tree with unique centers";
            return rep;
        }
        rep.applicable_case = "reverse-odd-p";
        rep.expected_span = *cl.span + dl + 1;
        Vertex wc = wl[0];
        if (ord.back() == wc) std::reverse(ord.begin(), ord.end());
        if (ord.front() != wc) {
            rep.applicable_case = "none";
            rep.detail = "no end of the ordering is the line-graph center";
            return rep;
        }
        tord.push_back(wt[0]);
        for (Vertex x : ord) tord.push_back(lt.name_of[x]);
    } else {
        rep.applicable_case = "reverse-multi-center";
        rep.expected_span = *cl.span + dl + 1;
        AncestorOracle anc(lt.tree, lt.root, lt.tree_parent);
        const int q = al.g.p;
        for (int i = 0; i < q; ++i)
            for (int j = i + 1; j < q; ++j) {
                Vertex u = lt.name_of[ord[i]], v = lt.name_of[ord[j]];
                if (anc.related(u, v) && j - i < dl + 1) {
                    rep.applicable_case = "none";
                    rep.detail = "nested edges " + std::to_string(u) + " and " +
                                 std::to_string(v) + " sit " + std::to_string(j - i) +
                                 " apart, need at least " + std::to_string(dl + 1);
                    return rep;
                }
            }
        tord.push_back(wt[0]);
        for (Vertex x : ord) tord.push_back(lt.name_of[x]);
    }

    finish_transfer(rep, at, tord);
    return rep;
}

namespace {

int64_t checked_width(int64_t width, int64_t factor) {
    width *= factor;
    if (width > 2'000'000) throw std::invalid_argument("family too large");
    return width;
}

int64_t level_wise_line_rn(const LevelWiseRegularTreeSpec& s) {
    const int h = static_cast<int>(s.degrees.size());
    require(h >= 1, "level-wise regular tree needs at least one level");
    for (int m : s.degrees)
        require(m >= 3, "line-graph formula needs every level degree at least 3");

    if (s.roots == 1) {
        int64_t n = 1, width = 1, sum = 0, prod = 1;  // prod = m_1-1 .. m_{i-1}-1
        for (int i = 1; i <= h; ++i) {
            width = checked_width(width, i == 1 ? s.degrees[0] : s.degrees[i - 1] - 1);
            n += width;
            if (i >= 2) prod *= s.degrees[i - 1] - 1;
            sum += static_cast<int64_t>(s.degrees[0]) * i * prod;
        }
        const int64_t d = 2 * h;
        return (d + 1) * (n - 1) + 1 - 2 * sum - 2 * h;
    }

    require(s.roots == 2, "level-wise regular tree has one or two roots");
    int64_t n = 2, width = 2, sum = 0, prod = 1;  // prod = m_0-1 .. m_{i-1}-1
    for (int i = 1; i <= h; ++i) {
        width = checked_width(width, s.degrees[i - 1] - 1);
        n += width;
        prod *= s.degrees[i - 1] - 1;
        sum += static_cast<int64_t>(i) * prod;
    }
    const int64_t d = 2 * h + 1;
    return d * (n - 1) - 4 * sum - 2 * h;
}

}  // namespace

std::int64_t corollary_rn(const FamilySpec& family) {
    if (const auto* b = std::get_if<BananaSpec>(&family)) {
        require(b->n >= 5 && b->k >= 4, "banana line-graph formula needs n >= 5 and k >= 4");
        return static_cast<int64_t>(b->n) * (b->k + 6) - 5;
    }
    if (const auto* f = std::get_if<FirecrackerSpec>(&family)) {
        require(f->n >= 3 && f->k >= 3, "firecracker line-graph formula needs n >= 3 and k >= 3");
        const int64_t n = f->n, k = f->k;
        if (n % 2 == 1) return (n * n + 1) / 2 * k + 4 * n - 6;
        return n * n / 2 * k + 4 * n - 5;
    }
    if (const auto* t = std::get_if<LevelWiseRegularTreeSpec>(&family)) return level_wise_line_rn(*t);
    if (const auto* c = std::get_if<CompleteMArySpec>(&family)) {
        require(c->h >= 1, "complete m-ary tree needs height at least 1");
        require(c->m >= 3, "line-graph formula needs branching at least 3");
        LevelWiseRegularTreeSpec conv;
        conv.roots = 1;
        conv.degrees.assign(c->h, c->m + 1);
        conv.degrees[0] = c->m;
        return level_wise_line_rn(conv);
    }
    throw std::invalid_argument("no closed-form line-graph radio number for this family");
}

}  // namespace radio
