#include "radio/families.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace radio {

namespace {

using json = nlohmann::json;

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

std::string child_name(const std::string& parent, int idx) {
  if (parent.empty() || parent.back() != '}')
    return parent + "_{" + std::to_string(idx) + "}";
  std::string out = parent;
  out.pop_back();
  out += "," + std::to_string(idx) + "}";
  return out;
}

void check_size(std::int64_t p) {
  require(p <= 2'000'000, "family instance too large");
}

// Shared build state for the clique-core family: besides the graph we track,
// per vertex, its core index, its depth, and its mixed-radix position value
// (digit at depth s has weight prod_{q<s} k_q*m_q), which the visiting order
// is defined in terms of.
struct CoreBuild {
  NamedGraph ng;
  std::vector<int> core_of;
  std::vector<int> depth_of;
  std::vector<std::int64_t> mval;
  std::vector<std::int64_t> block_sizes;  // K_s = prod_{q<=s} k_q*m_q
};

CoreBuild build_level_wise(const LevelWiseRegularBlockSpec& s) {
  require(s.m >= 1, "core size must be at least 1");
  require(s.m != 2, "core size 2 is not supported");
  require(!s.pairs.empty(), "at least one level is required");
  const int r = static_cast<int>(s.pairs.size());
  for (auto [k, mm] : s.pairs) {
    require(k >= 1, "copies per vertex must be at least 1");
    require(mm >= 2, "attached clique size must be at least 2");
  }
  require(s.m > 1 || s.pairs[0].first >= 2,
          "a single-vertex core needs at least 2 copies at the first level");

  std::vector<std::int64_t> K(r + 1, 1);
  std::int64_t p = 1;
  for (int l = 1; l <= r; ++l) {
    K[l] = K[l - 1] * s.pairs[l - 1].first;
    check_size(K[l]);
    K[l] *= s.pairs[l - 1].second;
    check_size(K[l]);
    p += K[l];
    check_size(p);
  }
  p *= s.m;
  check_size(p);

  CoreBuild b;
  b.block_sizes = K;
  b.ng.names.resize(p);
  b.core_of.assign(p, -1);
  b.depth_of.assign(p, 0);
  b.mval.assign(p, 0);

  std::vector<std::pair<int, int>> edges;
  std::vector<int> frontier;
  for (int t = 0; t < s.m; ++t) {
    b.ng.names[t] = "w^" + std::to_string(t);
    b.core_of[t] = t;
    frontier.push_back(t);
    for (int u = 0; u < t; ++u) edges.emplace_back(u, t);
  }

  int next = s.m;
  for (int l = 1; l <= r; ++l) {
    const int k = s.pairs[l - 1].first;
    const int mm = s.pairs[l - 1].second;
    std::vector<int> produced;
    for (int parent : frontier) {
      const int base = next;
      for (int c = 0; c < k * mm; ++c) {
        const int v = next++;
        b.ng.names[v] = child_name(b.ng.names[parent], c);
        b.core_of[v] = b.core_of[parent];
        b.depth_of[v] = l;
        b.mval[v] = b.mval[parent] + static_cast<std::int64_t>(c) * K[l - 1];
        edges.emplace_back(parent, v);
        for (int c2 = c % k; c2 < c; c2 += k)
          edges.emplace_back(base + c2, v);
        produced.push_back(v);
      }
    }
    frontier = std::move(produced);
  }

  b.ng.graph = graph_from_edges(static_cast<int>(p), edges);
  return b;
}

// id layout for the extended star: core 0..m-1, then per arm a contiguous
// run of h*(n-1) vertices ordered by (depth, slot).
struct StarLayout {
  int m, k, h, n;
  int arms;       // m*k
  int arm_size;   // h*(n-1)
  int p;
  int id(int l, int i, int j) const {  // arm l in 1..arms, depth i, slot j
    return m + (l - 1) * arm_size + (i - 1) * (n - 1) + (j - 1);
  }
  int anchor(int l) const { return (l - 1) % m; }
  int depth_of(int v) const {
    return v < m ? 0 : (v - m) % arm_size / (n - 1) + 1;
  }
};

StarLayout star_layout(const ExtendedStarSpec& s) {
  require(s.m >= 1, "core size must be at least 1");
  require(s.k >= 1, "arms per core vertex must be at least 1");
  require(s.m > 1 || s.k >= 3,
          "a single-vertex core needs at least 3 arms");
  require(s.h >= 1, "arm length must be at least 1");
  require(s.n >= 2, "arm clique size must be at least 2");
  const std::int64_t arms = static_cast<std::int64_t>(s.m) * s.k;
  check_size(arms);
  const std::int64_t arm_size = static_cast<std::int64_t>(s.h) * (s.n - 1);
  check_size(arm_size);
  const std::int64_t p = arms * arm_size + s.m;
  check_size(p);
  StarLayout lo;
  lo.m = s.m;
  lo.k = s.k;
  lo.h = s.h;
  lo.n = s.n;
  lo.arms = static_cast<int>(arms);
  lo.arm_size = static_cast<int>(arm_size);
  lo.p = static_cast<int>(p);
  return lo;
}

NamedGraph build_extended_star(const ExtendedStarSpec& s) {
  const StarLayout lo = star_layout(s);
  NamedGraph ng;
  ng.names.resize(lo.p);
  std::vector<std::pair<int, int>> edges;
  for (int t = 0; t < lo.m; ++t) {
    ng.names[t] = "w^" + std::to_string(t + 1);
    for (int u = 0; u < t; ++u) edges.emplace_back(u, t);
  }
  for (int l = 1; l <= lo.arms; ++l) {
    for (int i = 1; i <= lo.h; ++i) {
      const int parent = i == 1 ? lo.anchor(l) : lo.id(l, i - 1, lo.n - 1);
      for (int j = 1; j <= lo.n - 1; ++j) {
        const int v = lo.id(l, i, j);
        ng.names[v] = "w^" + std::to_string(l) + "_{" + std::to_string(i) +
                      "," + std::to_string(j) + "}";
        edges.emplace_back(parent, v);
        for (int j2 = 1; j2 < j; ++j2) edges.emplace_back(lo.id(l, i, j2), v);
      }
    }
  }
  ng.graph = graph_from_edges(lo.p, edges);
  return ng;
}

NamedGraph build_path_of_cliques(const PathOfCliquesSpec& s) {
  require(s.h >= 1, "clique count must be at least 1");
  require(s.n >= 2, "clique size must be at least 2");
  const std::int64_t p = static_cast<std::int64_t>(s.h) * (s.n - 1) + 1;
  check_size(p);
  NamedGraph ng;
  ng.names.resize(p);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i <= s.h; ++i) ng.names[i] = "v" + std::to_string(i);
  int next = s.h + 1;
  for (int i = 1; i <= s.h; ++i) {
    std::vector<int> block = {i - 1, i};
    for (int j = 1; j <= s.n - 2; ++j) {
      ng.names[next] =
          "w" + std::to_string(i) + "_" + std::to_string(j);
      block.push_back(next++);
    }
    for (std::size_t a = 0; a < block.size(); ++a)
      for (std::size_t c = a + 1; c < block.size(); ++c)
        edges.emplace_back(block[a], block[c]);
  }
  ng.graph = graph_from_edges(static_cast<int>(p), edges);
  return ng;
}

// Tree with all leaves at depth h and prescribed degree per depth; one or
// two roots (two roots share a central edge).
NamedGraph build_degree_tree(int roots, const std::vector<int>& degrees) {
  require(roots == 1 || roots == 2, "roots must be 1 or 2");
  require(!degrees.empty(), "degree profile must be non-empty");
  const int h = static_cast<int>(degrees.size());
  require(degrees[0] >= 1, "root degree must be at least 1");
  if (roots == 2 && h >= 2)
    require(degrees[0] >= 2, "two roots of degree 1 leave later depths empty");
  for (int i = 1; i < h; ++i)
    require(degrees[i] >= 2, "inner degrees must be at least 2");

  std::int64_t p = roots;
  {
    std::int64_t width = roots == 1
                             ? degrees[0]
                             : 2 * (static_cast<std::int64_t>(degrees[0]) - 1);
    for (int i = 1; i <= h; ++i) {
      p += width;
      check_size(p);
      if (i < h) width *= degrees[i] - 1;
    }
  }

  NamedGraph ng;
  ng.names.resize(p);
  std::vector<std::pair<int, int>> edges;
  std::vector<int> frontier;
  ng.names[0] = "w";
  frontier.push_back(0);
  int next = 1;
  if (roots == 2) {
    ng.names[1] = "w'";
    frontier.push_back(1);
    edges.emplace_back(0, 1);
    next = 2;
  }
  for (int depth = 1; depth <= h; ++depth) {
    const int children =
        depth == 1 ? degrees[0] - (roots == 2 ? 1 : 0) : degrees[depth - 1] - 1;
    std::vector<int> produced;
    for (int parent : frontier) {
      for (int c = 0; c < children; ++c) {
        const int v = next++;
        ng.names[v] = child_name(ng.names[parent], c);
        edges.emplace_back(parent, v);
        produced.push_back(v);
      }
    }
    frontier = std::move(produced);
  }
  ng.graph = graph_from_edges(static_cast<int>(p), edges);
  return ng;
}

NamedGraph build_firecracker(const FirecrackerSpec& s) {
  require(s.n >= 1, "path length must be at least 1");
  require(s.k >= 2, "star size must be at least 2");
  const std::int64_t p = static_cast<std::int64_t>(s.n) * s.k;
  check_size(p);
  NamedGraph ng;
  ng.names.resize(p);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < s.n; ++i) {
    ng.names[i] = "v" + std::to_string(i + 1);
    if (i > 0) edges.emplace_back(i - 1, i);
    const int center = s.n + i * (s.k - 1);
    ng.names[center] = "c" + std::to_string(i + 1);
    edges.emplace_back(i, center);
    for (int j = 1; j <= s.k - 2; ++j) {
      ng.names[center + j] =
          "c" + std::to_string(i + 1) + "_l" + std::to_string(j);
      edges.emplace_back(center, center + j);
    }
  }
  ng.graph = graph_from_edges(static_cast<int>(p), edges);
  return ng;
}

NamedGraph build_caterpillar(const CaterpillarSpec& s) {
  require(s.n >= 3, "caterpillar needs n >= 3");
  require(s.k >= 3, "spine degree must be at least 3");
  const int spine = s.n - 2;
  const std::int64_t p =
      static_cast<std::int64_t>(s.n - 2) * (s.k - 1) + 2;
  check_size(p);
  NamedGraph ng;
  ng.names.resize(p);
  std::vector<std::pair<int, int>> edges;
  int next = spine;
  for (int i = 0; i < spine; ++i) {
    ng.names[i] = "s" + std::to_string(i + 1);
    if (i > 0) edges.emplace_back(i - 1, i);
    const int neighbors = (spine == 1) ? 0 : (i == 0 || i == spine - 1 ? 1 : 2);
    for (int j = 0; j < s.k - neighbors; ++j) {
      ng.names[next] = "s" + std::to_string(i + 1) + "_l" + std::to_string(j + 1);
      edges.emplace_back(i, next++);
    }
  }
  ng.graph = graph_from_edges(static_cast<int>(p), edges);
  return ng;
}

VertexOrdering order_level_wise(const LevelWiseRegularBlockSpec& s) {
  const CoreBuild b = build_level_wise(s);
  const int p = b.ng.graph.p;
  const int m = s.m;
  const int r = static_cast<int>(s.pairs.size());
  std::vector<std::int64_t> suffix(r + 2, 0);
  for (int l = r; l >= 1; --l) suffix[l] = suffix[l + 1] + b.block_sizes[l];

  VertexOrdering ord(p, -1);
  ord[0] = m - 1;
  for (int t = 0; t + 1 < m; ++t) ord[p - m + 1 + t] = t;
  for (int v = m; v < p; ++v) {
    const std::int64_t j =
        m * (b.mval[v] + suffix[b.depth_of[v] + 1]) + b.core_of[v] + 1;
    if (j < 1 || j > p - m || ord[j] != -1)
      throw std::logic_error("level-wise ordering slots are not a bijection");
    ord[j] = v;
  }
  return ord;
}

VertexOrdering order_extended_star(const ExtendedStarSpec& s) {
  const StarLayout lo = star_layout(s);
  const int arms = lo.arms;
  const std::int64_t total = static_cast<std::int64_t>(arms) * lo.arm_size;
  std::vector<int> w_of_t(total + 1, -1);

  auto place = [&](std::int64_t t, int v) {
    if (t < 1 || t > total || w_of_t[t] != -1)
      throw std::logic_error("arm ordering slots are not a bijection");
    w_of_t[t] = v;
  };

  const std::int64_t a = arms;      // vertices consumed per sweep
  const int w = lo.n - 1;           // slots per depth
  if (arms % 2 == 1) {
    const int c = (lo.h + 1) / 2;
    for (int l = 1; l <= arms; ++l)
      for (int i = 1; i <= lo.h; ++i)
        for (int j = 1; j <= w; ++j) {
          std::int64_t t;
          if (lo.h % 2 == 1 && i == c)
            t = 2 * a * (i - 1) * w + a * (j - 1) + l;
          else if (l % 2 == 1)
            t = i <= (lo.h + 1) / 2 - (lo.h % 2)
                    ? 2 * a * (i - 1) * w + 2 * a * (j - 1) + l
                    : 2 * a * (lo.h - i) * w + 2 * a * (j - 1) + l + a;
          else
            t = i <= (lo.h + 1) / 2 - (lo.h % 2)
                    ? 2 * a * (i - 1) * w + 2 * a * (j - 1) + l + a
                    : 2 * a * (lo.h - i) * w + 2 * a * (j - 1) + l;
          place(t, lo.id(l, i, j));
        }
  } else {
    for (int l = 1; l <= arms; ++l)
      for (int i = 1; i <= lo.h; ++i)
        for (int j = 1; j <= w; ++j) {
          const std::int64_t t =
              l % 2 == 0 ? a * (i - 1) * w + a * (j - 1) + l
                         : a * (lo.h - i) * w + a * (j - 1) + l;
          place(t, lo.id(l, i, j));
        }
  }

  VertexOrdering ord;
  ord.reserve(lo.p);
  if (lo.m == 1) {
    for (std::int64_t t = 1; t <= total; ++t) ord.push_back(w_of_t[t]);
    ord.push_back(0);
  } else {
    ord.push_back(lo.m - 1);
    for (std::int64_t t = 1; t <= total; ++t) ord.push_back(w_of_t[t]);
    for (int t = 0; t + 1 < lo.m; ++t) ord.push_back(t);
  }

  // The construction promises consecutive depth sums at most h+2, with the
  // extreme reached at most once in any window of m*k consecutive pairs.
  std::vector<int> eq;
  for (std::size_t i = 0; i + 1 < ord.size(); ++i) {
    const int sum = lo.depth_of(ord[i]) + lo.depth_of(ord[i + 1]);
    if (sum > lo.h + 2)
      throw std::logic_error("consecutive arm depths exceed their bound");
    eq.push_back(sum == lo.h + 2 ? 1 : 0);
  }
  int window = 0;
  for (std::size_t i = 0; i < eq.size(); ++i) {
    window += eq[i];
    if (i >= static_cast<std::size_t>(arms)) window -= eq[i - arms];
    if (window > 1)
      throw std::logic_error("depth bound reached twice in one window");
  }
  return ord;
}

int get_int(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw std::invalid_argument(std::string("missing integer field: ") + key);
  return j[key].get<int>();
}

}  // namespace

NamedGraph generate(const FamilySpec& spec) {
  return std::visit(
      [](const auto& s) -> NamedGraph {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, LevelWiseRegularBlockSpec>) {
          return build_level_wise(s).ng;
        } else if constexpr (std::is_same_v<T, PathOfCliquesSpec>) {
          return build_path_of_cliques(s);
        } else if constexpr (std::is_same_v<T, ExtendedStarSpec>) {
          return build_extended_star(s);
        } else if constexpr (std::is_same_v<T, TreePathSpec>) {
          require(s.n >= 1, "path needs at least one vertex");
          check_size(s.n);
          NamedGraph ng;
          std::vector<std::pair<int, int>> edges;
          for (int i = 0; i < s.n; ++i) {
            ng.names.push_back("v" + std::to_string(i + 1));
            if (i > 0) edges.emplace_back(i - 1, i);
          }
          ng.graph = graph_from_edges(s.n, edges);
          return ng;
        } else if constexpr (std::is_same_v<T, TreeStarSpec>) {
          require(s.n >= 1, "star needs at least one leaf");
          check_size(static_cast<std::int64_t>(s.n) + 1);
          NamedGraph ng;
          ng.names.push_back("c");
          std::vector<std::pair<int, int>> edges;
          for (int i = 1; i <= s.n; ++i) {
            ng.names.push_back("l" + std::to_string(i));
            edges.emplace_back(0, i);
          }
          ng.graph = graph_from_edges(s.n + 1, edges);
          return ng;
        } else if constexpr (std::is_same_v<T, CompleteMArySpec>) {
          require(s.h >= 1, "height must be at least 1");
          require(s.m >= 1, "arity must be at least 1");
          std::vector<int> degrees(s.h, s.m + 1);
          degrees[0] = s.m;
          return build_degree_tree(1, degrees);
        } else if constexpr (std::is_same_v<T, LevelWiseRegularTreeSpec>) {
          return build_degree_tree(s.roots, s.degrees);
        } else if constexpr (std::is_same_v<T, BananaSpec>) {
          require(s.n >= 1, "banana needs at least one arm");
          require(s.k >= 3, "banana stars need at least 3 vertices");
          return build_degree_tree(1, {s.n, 2, s.k - 1});
        } else if constexpr (std::is_same_v<T, FirecrackerSpec>) {
          return build_firecracker(s);
        } else {
          static_assert(std::is_same_v<T, CaterpillarSpec>);
          return build_caterpillar(s);
        }
      },
      spec);
}

VertexOrdering canonical_ordering(const FamilySpec& spec) {
  if (const auto* g = std::get_if<LevelWiseRegularBlockSpec>(&spec))
    return order_level_wise(*g);
  if (const auto* s = std::get_if<ExtendedStarSpec>(&spec))
    return order_extended_star(*s);
  throw std::invalid_argument("no closed-form ordering for family " +
                              family_name(spec));
}

std::int64_t closed_form_rn(const FamilySpec& spec) {
  if (const auto* g = std::get_if<LevelWiseRegularBlockSpec>(&spec)) {
    const CoreBuild b = build_level_wise(*g);
    const int r = static_cast<int>(g->pairs.size());
    std::int64_t sum = 0, weighted = 0;
    for (int l = 1; l <= r; ++l) {
      sum += b.block_sizes[l];
      weighted += l * b.block_sizes[l];
    }
    const std::int64_t eps = g->m == 1 ? 1 : 0;
    return (g->m - 1 + g->m * sum) * (2 * r + 1) - 2 * g->m * weighted + eps;
  }
  if (const auto* s = std::get_if<ExtendedStarSpec>(&spec)) {
    star_layout(*s);
    const std::int64_t eps = s->m == 1 ? 1 : 0;
    return static_cast<std::int64_t>(s->m) * s->k * s->h * s->h * (s->n - 1) +
           static_cast<std::int64_t>(s->m - 1) * (2 * s->h + 1) + eps;
  }
  throw std::invalid_argument("no closed-form radio number for family " +
                              family_name(spec));
}

std::string family_name(const FamilySpec& spec) {
  return std::visit(
      [](const auto& s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, LevelWiseRegularBlockSpec>)
          return "level_wise_regular_block";
        else if constexpr (std::is_same_v<T, PathOfCliquesSpec>)
          return "path_of_cliques";
        else if constexpr (std::is_same_v<T, ExtendedStarSpec>)
          return "extended_star";
        else if constexpr (std::is_same_v<T, TreePathSpec>)
          return "tree_path";
        else if constexpr (std::is_same_v<T, TreeStarSpec>)
          return "tree_star";
        else if constexpr (std::is_same_v<T, CompleteMArySpec>)
          return "complete_mary";
        else if constexpr (std::is_same_v<T, LevelWiseRegularTreeSpec>)
          return "level_wise_regular_tree";
        else if constexpr (std::is_same_v<T, BananaSpec>)
          return "banana";
        else if constexpr (std::is_same_v<T, FirecrackerSpec>)
          return "firecracker";
        else
          return "caterpillar";
      },
      spec);
}

FamilySpec parse_family_spec(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad family spec: ") + e.what());
  }
  if (!j.is_object() || !j.contains("family") || !j["family"].is_string())
    throw std::invalid_argument("family spec needs a \"family\" string field");
  const std::string name = j["family"].get<std::string>();

  if (name == "level_wise_regular_block") {
    LevelWiseRegularBlockSpec s;
    s.m = get_int(j, "m");
    if (!j.contains("pairs") || !j["pairs"].is_array())
      throw std::invalid_argument("missing pairs array");
    for (const auto& e : j["pairs"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
          !e[1].is_number_integer())
        throw std::invalid_argument("pairs entries must be [copies, size]");
      s.pairs.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return s;
  }
  if (name == "path_of_cliques")
    return PathOfCliquesSpec{get_int(j, "h"), get_int(j, "n")};
  if (name == "extended_star")
    return ExtendedStarSpec{get_int(j, "m"), get_int(j, "k"), get_int(j, "h"),
                            get_int(j, "n")};
  if (name == "tree_path") return TreePathSpec{get_int(j, "n")};
  if (name == "tree_star") return TreeStarSpec{get_int(j, "n")};
  if (name == "complete_mary")
    return CompleteMArySpec{get_int(j, "h"), get_int(j, "m")};
  if (name == "level_wise_regular_tree") {
    LevelWiseRegularTreeSpec s;
    s.roots = get_int(j, "roots");
    if (!j.contains("degrees") || !j["degrees"].is_array())
      throw std::invalid_argument("missing degrees array");
    for (const auto& e : j["degrees"]) {
      if (!e.is_number_integer())
        throw std::invalid_argument("degrees entries must be integers");
      s.degrees.push_back(e.get<int>());
    }
    return s;
  }
  if (name == "banana") return BananaSpec{get_int(j, "n"), get_int(j, "k")};
  if (name == "firecracker")
    return FirecrackerSpec{get_int(j, "n"), get_int(j, "k")};
  if (name == "caterpillar")
    return CaterpillarSpec{get_int(j, "n"), get_int(j, "k")};
  throw std::invalid_argument("unknown family: " + name);
}

Graph random_block_graph(std::uint64_t seed, int p, int max_clique) {
  require(p >= 1, "vertex count must be positive");
  require(max_clique >= 2, "max clique size must be at least 2");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> edges;
  int n = 1;
  while (n < p) {
    const int remaining = p - n;
    const int smax = std::min(max_clique, remaining + 1);
    const int size = 2 + static_cast<int>(rng() % (smax - 1));
    const int anchor = static_cast<int>(rng() % n);
    std::vector<int> block = {anchor};
    for (int i = 0; i < size - 1; ++i) block.push_back(n++);
    for (std::size_t a = 0; a < block.size(); ++a)
      for (std::size_t b = a + 1; b < block.size(); ++b)
        edges.emplace_back(block[a], block[b]);
  }
  return graph_from_edges(p, edges);
}

}  // namespace radio
