#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>

namespace locdom::oracles {

namespace {

uint64_t bit(int v) { return 1ULL << v; }

bool subset_resolves(const Graph& g, const std::vector<std::vector<int>>& d, uint64_t s) {
  int n = g.order();
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      bool ok = false;
      for (int u = 0; u < n && !ok; ++u)
        if ((s & bit(u)) && d[u][x] != d[u][y]) ok = true;
      if (!ok) return false;
    }
  return true;
}

bool subset_distinguishes(const Graph& g, uint64_t s) {
  int n = g.order();
  for (int x = 0; x < n; ++x) {
    if (s & bit(x)) continue;
    for (int y = x + 1; y < n; ++y) {
      if (s & bit(y)) continue;
      bool ok = false;
      for (int u = 0; u < n && !ok; ++u)
        if ((s & bit(u)) && g.adjacent(u, x) != g.adjacent(u, y)) ok = true;
      if (!ok) return false;
    }
  }
  return true;
}

bool subset_dominates(const Graph& g, uint64_t s) {
  int n = g.order();
  for (int x = 0; x < n; ++x) {
    if (s & bit(x)) continue;
    bool ok = false;
    for (int u = 0; u < n && !ok; ++u)
      if ((s & bit(u)) && g.adjacent(u, x)) ok = true;
    if (!ok) return false;
  }
  return true;
}

bool subset_k_dominates(const Graph& g, uint64_t s, int k) {
  int n = g.order();
  for (int x = 0; x < n; ++x) {
    if (s & bit(x)) continue;
    int hits = 0;
    for (int u = 0; u < n; ++u)
      if ((s & bit(u)) && g.adjacent(u, x)) ++hits;
    if (hits < k) return false;
  }
  return true;
}

template <class Feasible>
int min_over_subsets(int n, Feasible&& ok) {
  int best = n + 1;
  for (uint64_t s = 0; s < (1ULL << n); ++s)
    if (std::popcount(s) < best && ok(s)) best = std::popcount(s);
  return best;
}

}  // namespace

std::vector<std::vector<int>> floyd_warshall(const Graph& g) {
  int n = g.order();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kUnreached));
  for (int v = 0; v < n; ++v) d[v][v] = 0;
  for (const auto& [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  return d;
}

bool has_c4(const Graph& g) {
  int n = g.order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int e = 0; e < n; ++e) {
          if (a == b || a == c || a == e || b == c || b == e || c == e) continue;
          if (g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(c, e) && g.adjacent(e, a))
            return true;
        }
  return false;
}

int min_resolving_set(const Graph& g) {
  auto d = floyd_warshall(g);
  return min_over_subsets(g.order(), [&](uint64_t s) { return subset_resolves(g, d, s); });
}

int min_locating_dominating_set(const Graph& g) {
  return min_over_subsets(g.order(), [&](uint64_t s) {
    return subset_distinguishes(g, s) && subset_dominates(g, s);
  });
}

int min_dominating_set(const Graph& g) {
  return min_over_subsets(g.order(), [&](uint64_t s) { return subset_dominates(g, s); });
}

int min_k_dominating_set(const Graph& g, int k) {
  return min_over_subsets(g.order(), [&](uint64_t s) { return subset_k_dominates(g, s, k); });
}

int max_minimal_dominating_set(const Graph& g) {
  int n = g.order();
  int best = -1;
  for (uint64_t s = 0; s < (1ULL << n); ++s) {
    if (!subset_dominates(g, s)) continue;
    bool minimal = true;
    for (int v = 0; v < n && minimal; ++v)
      if ((s & bit(v)) && subset_dominates(g, s & ~bit(v))) minimal = false;
    if (minimal) best = std::max(best, std::popcount(s));
  }
  return best;
}

int max_independent_set(const Graph& g) {
  int n = g.order();
  int best = 0;
  for (uint64_t s = 0; s < (1ULL << n); ++s) {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v)
        if ((s & bit(u)) && (s & bit(v)) && g.adjacent(u, v)) ok = false;
    if (ok) best = std::max(best, std::popcount(s));
  }
  return best;
}

int max_clique(const Graph& g) { return max_independent_set(complement(g)); }

namespace {

bool colorable(const Graph& g, int v, int k, std::vector<int>& color) {
  if (v == g.order()) return true;
  for (int c = 0; c < k; ++c) {
    bool ok = true;
    for (int u = 0; u < v && ok; ++u)
      if (g.adjacent(u, v) && color[u] == c) ok = false;
    if (!ok) continue;
    color[v] = c;
    if (colorable(g, v + 1, k, color)) return true;
    color[v] = -1;
  }
  return false;
}

}  // namespace

int min_colors(const Graph& g) {
  if (g.order() == 0) return 0;
  for (int k = 1;; ++k) {
    std::vector<int> color(g.order(), -1);
    if (colorable(g, 0, k, color)) return k;
  }
}

std::vector<std::vector<int>> all_automorphisms(const Graph& g) {
  int n = g.order();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v)
        if (g.adjacent(u, v) != g.adjacent(perm[u], perm[v])) ok = false;
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

int min_determining_set(const Graph& g) {
  int n = g.order();
  auto auts = all_automorphisms(g);
  int best = n + 1;
  for (uint64_t s = 0; s < (1ULL << n); ++s) {
    if (std::popcount(s) >= best) continue;
    bool trivial = true;
    for (const auto& perm : auts) {
      bool fixes = true, identity = true;
      for (int v = 0; v < n; ++v) {
        if ((s & bit(v)) && perm[v] != v) fixes = false;
        if (perm[v] != v) identity = false;
      }
      if (fixes && !identity) trivial = false;
    }
    if (trivial) best = std::popcount(s);
  }
  return best;
}

std::vector<std::vector<int>> orbit_partition(const Graph& g) {
  int n = g.order();
  auto auts = all_automorphisms(g);
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int v) {
    return parent[v] == v ? v : parent[v] = find(parent[v]);
  };
  for (const auto& perm : auts)
    for (int v = 0; v < n; ++v) {
      int a = find(v), b = find(perm[v]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::vector<std::vector<int>> groups(n);
  for (int v = 0; v < n; ++v) groups[find(v)].push_back(v);
  std::vector<std::vector<int>> out;
  for (auto& grp : groups)
    if (!grp.empty()) out.push_back(grp);
  return out;
}

namespace {

int match_rec(const Graph& g, uint64_t used) {
  int n = g.order();
  int v = -1;
  for (int u = 0; u < n; ++u)
    if (!(used & bit(u))) {
      v = u;
      break;
    }
  if (v < 0) return 0;
  int best = match_rec(g, used | bit(v));  // leave v unmatched
  for (int u : g.neighbors(v))
    if (!(used & bit(u))) best = std::max(best, 1 + match_rec(g, used | bit(v) | bit(u)));
  return best;
}

}  // namespace

int max_matching(const Graph& g) { return match_rec(g, 0); }

}  // namespace locdom::oracles
