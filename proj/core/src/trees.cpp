#include "locdom/trees.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "locdom/errors.hpp"

namespace locdom {

bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.edge_count() == g.order() - 1 && is_connected(g);
}

namespace {

void require_tree(const Graph& g, const char* op) {
  if (!is_tree(g)) fail(Err::kNotATree, std::string(op) + " requires a tree");
}

}  // namespace

TreeAnalysis analyze_tree(const Graph& g) {
  require_tree(g, "analyze_tree");
  int n = g.order();
  TreeAnalysis out;
  out.is_path = true;
  for (int v = 0; v < n && out.is_path; ++v)
    if (g.degree(v) >= 3) out.is_path = false;
  if (out.is_path) return out;

  std::map<int, MajorVertexInfo> majors;
  for (int leaf = 0; leaf < n; ++leaf) {
    if (g.degree(leaf) != 1) continue;
    // Walk up the leg; the nearest major vertex owns this terminal.
    int prev = leaf, cur = g.neighbors(leaf).first(), steps = 1;
    std::vector<int> leg{leaf};
    while (g.degree(cur) < 3) {
      leg.push_back(cur);
      int next = -1;
      for (int u : g.neighbors(cur))
        if (u != prev) next = u;
      prev = cur;
      cur = next;
      ++steps;
    }
    auto [it, fresh] = majors.try_emplace(cur, MajorVertexInfo{});
    MajorVertexInfo& info = it->second;
    if (fresh) {
      info.vertex = cur;
      info.leg_vertices = VertexSet(n);
      info.leg_vertices.set(cur);
    }
    info.terminals.emplace_back(leaf, steps);
    for (int v : leg) info.leg_vertices.set(v);
  }

  for (auto& [v, info] : majors) {
    std::sort(info.terminals.begin(), info.terminals.end());
    info.ter = static_cast<int>(info.terminals.size());
    std::set<int> lengths;
    for (const auto& [leaf, len] : info.terminals) lengths.insert(len);
    info.ter_prime = static_cast<int>(lengths.size());
    info.n_u = info.leg_vertices.count();
    out.exterior_majors.push_back(info);
  }
  return out;
}

InvariantResult tree_metric_dimension(const Graph& g) {
  require_tree(g, "tree_metric_dimension");
  int n = g.order();
  if (n == 1) return {0, VertexSet(1), Method::kFormula, {}};
  TreeAnalysis ta = analyze_tree(g);
  if (ta.is_path) {
    // Either endpoint resolves a path.
    int endpoint = 0;
    while (g.degree(endpoint) != 1) ++endpoint;
    return {1, VertexSet::of(n, {endpoint}), Method::kFormula, {}};
  }
  int value = 0;
  VertexSet witness(n);
  for (const auto& info : ta.exterior_majors) {
    value += info.ter - 1;
    for (size_t i = 0; i + 1 < info.terminals.size(); ++i) witness.set(info.terminals[i].first);
  }
  if (!is_resolving(g, witness))
    throw std::logic_error("tree_metric_dimension: witness failed the resolving check");
  return {value, witness, Method::kFormula, {}};
}

int tree_det_lower_bound(const Graph& g) {
  require_tree(g, "tree_det_lower_bound");
  int sum = 0;
  for (const auto& info : analyze_tree(g).exterior_majors) sum += info.ter - info.ter_prime;
  return sum;
}

bool terprime_bound_check(const Graph& g) {
  require_tree(g, "terprime_bound_check");
  for (const auto& info : analyze_tree(g).exterior_majors)
    if (7 * info.ter_prime > 2 * info.n_u + 7) return false;
  return true;
}

}  // namespace locdom
