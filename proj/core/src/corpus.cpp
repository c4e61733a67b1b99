#include "locdom/corpus.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "locdom/automorphism.hpp"
#include "locdom/errors.hpp"
#include "locdom/graph_io.hpp"
#include "locdom/twins.hpp"

namespace locdom::corpus {

namespace {

// Upper-triangle bit encoding used to compare relabelings.
std::vector<uint64_t> triangle_bits(const Graph& g, const std::vector<int>& pos) {
  int n = g.order();
  std::vector<uint64_t> bits((static_cast<size_t>(n) * (n - 1) / 2 + 63) / 64, 0);
  std::vector<int> vertex_at(n);
  for (int v = 0; v < n; ++v) vertex_at[pos[v]] = v;
  size_t idx = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++idx)
      if (g.adjacent(vertex_at[i], vertex_at[j])) bits[idx >> 6] |= 1ULL << (idx & 63);
  return bits;
}

}  // namespace

Graph canonical_form(const Graph& g) {
  int n = g.order();
  if (n == 0) return g;
  std::vector<int> degree_colors(n);
  for (int v = 0; v < n; ++v) degree_colors[v] = g.degree(v);
  std::vector<int> color = equitable_colors(g, degree_colors);

  // Vertices grouped by color; each relabeling permutes inside the groups
  // only, so isomorphic graphs sweep identical candidate encodings.
  int classes = 1 + *std::max_element(color.begin(), color.end());
  std::vector<std::vector<int>> members(classes);
  for (int v = 0; v < n; ++v) members[color[v]].push_back(v);

  long long labelings = 1;
  for (const auto& cell : members) {
    for (size_t i = 2; i <= cell.size(); ++i) labelings *= static_cast<long long>(i);
    if (labelings > 4000000)
      fail(Err::kCapExceeded, "canonical_form: too many cell-respecting relabelings");
  }

  std::vector<int> offset(classes, 0);
  for (int c = 1; c < classes; ++c) offset[c] = offset[c - 1] + static_cast<int>(members[c - 1].size());

  std::vector<uint64_t> best;
  std::vector<int> best_pos;
  std::vector<std::vector<int>> perm = members;
  for (;;) {
    std::vector<int> pos(n);
    for (int c = 0; c < classes; ++c)
      for (size_t i = 0; i < perm[c].size(); ++i) pos[perm[c][i]] = offset[c] + static_cast<int>(i);
    std::vector<uint64_t> bits = triangle_bits(g, pos);
    if (best.empty() || bits < best) {
      best = bits;
      best_pos = pos;
    }
    // Advance the product of per-cell permutations, last cell fastest.
    int c = classes - 1;
    while (c >= 0 && !std::next_permutation(perm[c].begin(), perm[c].end())) --c;
    if (c < 0) break;
  }

  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges()) {
    int a = best_pos[u], b = best_pos[v];
    edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  return Graph(n, edges);
}

std::string canonical_key(const Graph& g) { return emit_graph6(canonical_form(g)); }

std::vector<Graph> all_graphs(int n) {
  if (n < 1 || n > 8) fail(Err::kCapExceeded, "all_graphs supports orders 1..8");
  std::vector<Graph> current{Graph(1, {})};
  for (int k = 2; k <= n; ++k) {
    std::map<std::string, Graph> next;
    for (const Graph& h : current) {
      std::vector<Edge> base = h.edges();
      for (uint64_t mask = 0; mask < (1ULL << (k - 1)); ++mask) {
        std::vector<Edge> edges = base;
        for (int v = 0; v < k - 1; ++v)
          if (mask & (1ULL << v)) edges.emplace_back(v, k - 1);
        Graph candidate(k, edges);
        Graph canon = canonical_form(candidate);
        next.try_emplace(emit_graph6(canon), canon);
      }
    }
    current.clear();
    for (auto& [key, graph] : next) current.push_back(graph);
  }
  return current;
}

std::vector<Graph> all_connected_graphs(int n) {
  std::vector<Graph> out;
  for (const Graph& g : all_graphs(n))
    if (is_connected(g)) out.push_back(g);
  return out;
}

namespace {

// Canonical string of a rooted tree: children encodings sorted.
std::string rooted_encoding(const Graph& g, int v, int parent) {
  std::vector<std::string> kids;
  for (int u : g.neighbors(v))
    if (u != parent) kids.push_back(rooted_encoding(g, u, v));
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (const auto& k : kids) s += k;
  s += ")";
  return s;
}

std::vector<int> tree_centers(const Graph& g) {
  int n = g.order();
  if (n == 1) return {0};
  std::vector<int> degree(n);
  for (int v = 0; v < n; ++v) degree[v] = g.degree(v);
  std::vector<int> layer;
  std::vector<char> removed(n, 0);
  for (int v = 0; v < n; ++v)
    if (degree[v] <= 1) layer.push_back(v);
  int remaining = n;
  while (remaining > 2) {
    std::vector<int> next;
    for (int v : layer) {
      removed[v] = 1;
      --remaining;
      for (int u : g.neighbors(v))
        if (!removed[u] && --degree[u] == 1) next.push_back(u);
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

std::string tree_key(const Graph& g) {
  std::vector<int> centers = tree_centers(g);
  if (centers.size() == 1) return rooted_encoding(g, centers[0], -1);
  std::string a = rooted_encoding(g, centers[0], centers[1]);
  std::string b = rooted_encoding(g, centers[1], centers[0]);
  if (b < a) std::swap(a, b);
  return a + "|" + b;
}

}  // namespace

std::vector<Graph> all_trees(int n) {
  if (n < 1 || n > 16) fail(Err::kCapExceeded, "all_trees supports orders 1..16");
  std::vector<Graph> current{Graph(1, {})};
  for (int k = 2; k <= n; ++k) {
    std::map<std::string, Graph> next;
    for (const Graph& t : current) {
      for (int attach = 0; attach < k - 1; ++attach) {
        std::vector<Edge> edges = t.edges();
        edges.emplace_back(attach, k - 1);
        Graph candidate(k, edges);
        next.try_emplace(tree_key(candidate), candidate);
      }
    }
    current.clear();
    for (auto& [key, graph] : next) current.push_back(graph);
  }
  return current;
}

Graph random_graph(Rng& rng, int n, double p) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.coin(p)) e.emplace_back(u, v);
  return Graph(n, e);
}

Graph random_tree(Rng& rng, int n) {
  if (n <= 1) return Graph(std::max(n, 1), {});
  if (n == 2) return Graph(2, {{0, 1}});
  std::vector<int> pruefer(n - 2);
  for (int& x : pruefer) x = rng.below(n);
  std::vector<int> degree(n, 1);
  for (int x : pruefer) ++degree[x];
  std::vector<Edge> e;
  int ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  int leaf = ptr;
  for (int x : pruefer) {
    e.emplace_back(std::min(leaf, x), std::max(leaf, x));
    if (--degree[x] == 1 && x < ptr) {
      leaf = x;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  e.emplace_back(std::min(leaf, n - 1), std::max(leaf, n - 1));
  return Graph(n, e);
}

std::optional<Graph> random_connected_twin_free(Rng& rng, int n, double p, int tries) {
  for (int t = 0; t < tries; ++t) {
    Graph g = random_graph(rng, n, p);
    if (is_connected(g) && is_twin_free(g)) return g;
  }
  return std::nullopt;
}

std::optional<Graph> random_twin_free_k2k_free(Rng& rng, int n, int k, int extra_edges,
                                               int tries) {
  for (int t = 0; t < tries; ++t) {
    Graph g = random_tree(rng, n);
    for (int attempt = 0; attempt < extra_edges; ++attempt) {
      int u = rng.below(n), v = rng.below(n);
      if (u == v || g.adjacent(u, v)) continue;
      std::vector<Edge> edges = g.edges();
      edges.emplace_back(std::min(u, v), std::max(u, v));
      Graph candidate(n, edges);
      if (!common_neighbor_excess(candidate, k)) g = candidate;
    }
    if (is_twin_free(g)) return g;
  }
  return std::nullopt;
}

}  // namespace locdom::corpus
