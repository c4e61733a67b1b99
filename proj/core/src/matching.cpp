#include "locdom/matching.hpp"

#include <algorithm>
#include <deque>

#include "locdom/errors.hpp"
#include "locdom/invariants.hpp"
#include "locdom/twins.hpp"

namespace locdom {

namespace {

Matching from_match_array(const Graph& g, const std::vector<int>& match) {
  Matching m;
  m.unmatched = VertexSet(g.order());
  for (int v = 0; v < g.order(); ++v) {
    if (match[v] < 0)
      m.unmatched.set(v);
    else if (v < match[v])
      m.edges.emplace_back(v, match[v]);
  }
  return m;
}

struct Blossom {
  const Graph& g;
  int n;
  std::vector<int> match, parent, base;
  std::vector<char> in_queue, in_blossom;

  explicit Blossom(const Graph& gr)
      : g(gr), n(gr.order()), match(n, -1), parent(n), base(n) {}

  int lowest_common_base(int a, int b) {
    std::vector<char> seen(n, 0);
    for (;;) {
      a = base[a];
      seen[a] = 1;
      if (match[a] == -1) break;
      a = parent[match[a]];
    }
    for (;;) {
      b = base[b];
      if (seen[b]) return b;
      b = parent[match[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base[v] != b) {
      in_blossom[base[v]] = 1;
      in_blossom[base[match[v]]] = 1;
      parent[v] = child;
      child = match[v];
      v = parent[match[v]];
    }
  }

  int find_augmenting_path(int root) {
    in_queue.assign(n, 0);
    parent.assign(n, -1);
    for (int v = 0; v < n; ++v) base[v] = v;
    std::deque<int> queue{root};
    in_queue[root] = 1;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int to : g.neighbors(v)) {
        if (base[v] == base[to] || match[v] == to) continue;
        if (to == root || (match[to] != -1 && parent[match[to]] != -1)) {
          // Odd cycle: contract the blossom up to the common base.
          int cur_base = lowest_common_base(v, to);
          in_blossom.assign(n, 0);
          mark_path(v, cur_base, to);
          mark_path(to, cur_base, v);
          for (int i = 0; i < n; ++i)
            if (in_blossom[base[i]]) {
              base[i] = cur_base;
              if (!in_queue[i]) {
                in_queue[i] = 1;
                queue.push_back(i);
              }
            }
        } else if (parent[to] == -1) {
          parent[to] = v;
          if (match[to] == -1) return to;
          in_queue[match[to]] = 1;
          queue.push_back(match[to]);
        }
      }
    }
    return -1;
  }

  void augment(int v) {
    while (v != -1) {
      int pv = parent[v], next = match[pv];
      match[v] = pv;
      match[pv] = v;
      v = next;
    }
  }

  std::vector<int> solve() {
    // Greedy seed keeps the search phase short.
    for (int v = 0; v < n; ++v) {
      if (match[v] != -1) continue;
      for (int u : g.neighbors(v))
        if (match[u] == -1) {
          match[v] = u;
          match[u] = v;
          break;
        }
    }
    for (int v = 0; v < n; ++v) {
      if (match[v] != -1) continue;
      int tail = find_augmenting_path(v);
      if (tail != -1) augment(tail);
    }
    return match;
  }
};

}  // namespace

Matching make_matching(const Graph& g, std::vector<Edge> edges) {
  int n = g.order();
  VertexSet covered(n);
  for (auto& [u, v] : edges) {
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= n || u == v || !g.adjacent(u, v))
      fail(Err::kBadParams, "make_matching: not an edge of the graph");
    if (covered.test(u) || covered.test(v))
      fail(Err::kBadParams, "make_matching: edges share an endpoint");
    covered.set(u);
    covered.set(v);
  }
  std::sort(edges.begin(), edges.end());
  return {std::move(edges), VertexSet::full(n).minus(covered)};
}

Matching maximum_matching(const Graph& g) {
  return from_match_array(g, Blossom(g).solve());
}

VertexSet um_set(const Graph& g, const Matching& m) {
  VertexSet um(g.order());
  for (int x : m.unmatched) {
    const VertexSet& nx = g.neighbors(x);
    if (nx.empty()) continue;  // isolated vertices have no exchange partner
    for (const auto& [u, v] : m.edges) {
      VertexSet pair = VertexSet::of(g.order(), {u, v});
      if (pair.contains_all(nx)) {
        um.set(x);
        break;
      }
    }
  }
  return um;
}

int edge_case(const Graph& g, const Matching& m, Edge e) {
  if (e.first > e.second) std::swap(e.first, e.second);
  if (std::find(m.edges.begin(), m.edges.end(), e) == m.edges.end())
    fail(Err::kBadParams, "edge_case: edge is not in the matching");
  VertexSet nu = g.neighbors(e.first) & m.unmatched;
  VertexSet nv = g.neighbors(e.second) & m.unmatched;
  if (nu.empty() && nv.empty()) return 1;
  if (nu.empty() != nv.empty()) return 2;
  if (nu == nv && nu.count() == 1) return 3;
  fail(Err::kNotMaximum, "edge_case: endpoints reach distinct unmatched vertices");
}

Matching eliminate_um(const Graph& g, const Matching& m) {
  if (!is_twin_free(g)) fail(Err::kNotTwinFree, "eliminate_um requires a twin-free graph");
  if (static_cast<int>(m.edges.size()) != static_cast<int>(maximum_matching(g).edges.size()))
    fail(Err::kNotMaximum, "eliminate_um requires a maximum matching");

  Matching cur = m;
  VertexSet um = um_set(g, cur);
  while (!um.empty()) {
    int x = um.first();
    Edge host{-1, -1};
    for (const auto& e : cur.edges) {
      VertexSet pair = VertexSet::of(g.order(), {e.first, e.second});
      if (pair.contains_all(g.neighbors(x))) {
        host = e;
        break;
      }
    }
    int mate = g.neighbors(x).test(host.first) ? host.first : host.second;

    std::vector<Edge> edges;
    for (const auto& e : cur.edges)
      if (e != host) edges.push_back(e);
    edges.emplace_back(std::min(mate, x), std::max(mate, x));
    cur = make_matching(g, std::move(edges));

    VertexSet next_um = um_set(g, cur);
    VertexSet expected = um;
    expected.reset(x);
    if (next_um != expected)
      throw std::logic_error("eliminate_um: exchange did not shrink U_M by exactly the chosen vertex");
    um = next_um;
  }
  if (cur.edges.size() != m.edges.size())
    throw std::logic_error("eliminate_um: cardinality changed");
  return cur;
}

MatchedPartition v1_construction(const Graph& g) {
  int n = g.order();
  if (n < 4) fail(Err::kBadParams, "v1_construction requires at least 4 vertices");
  if (!is_connected(g)) fail(Err::kDisconnected, "v1_construction requires a connected graph");
  if (!is_twin_free(g)) fail(Err::kNotTwinFree, "v1_construction requires a twin-free graph");
  if (common_neighbor_excess(g, 2))
    fail(Err::kHasC4, "v1_construction requires a C4-free graph");

  Matching m = eliminate_um(g, maximum_matching(g));
  MatchedPartition out{VertexSet(n), VertexSet(n), m};
  for (const auto& e : m.edges) {
    bool u_side = !(g.neighbors(e.first) & m.unmatched).empty();
    bool v_side = !(g.neighbors(e.second) & m.unmatched).empty();
    // The endpoint that reaches unmatched vertices carries the domination
    // duty; symmetric cases default to the lower index.
    int chosen = (v_side && !u_side) ? e.second : e.first;
    out.v1.set(chosen);
    out.v2.set(chosen == e.first ? e.second : e.first);
  }

  for (int x : m.unmatched)
    if ((g.neighbors(x) & out.v1).count() < 2)
      throw std::logic_error("v1_construction: unmatched vertex is not 2-dominated");
  if (!is_locating_dominating(g, out.v1))
    throw std::logic_error("v1_construction: V1 failed the locating-dominating check");
  return out;
}

}  // namespace locdom
