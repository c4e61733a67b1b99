#include "locdom/twins.hpp"

#include <numeric>

#include "locdom/errors.hpp"
#include "locdom/invariants.hpp"

namespace locdom {

bool are_twins(const Graph& g, int u, int v) {
  if (u == v) return false;
  if (g.neighbors(u) == g.neighbors(v)) return true;
  return g.closed_neighborhood(u) == g.closed_neighborhood(v);
}

bool is_twin_free(const Graph& g) {
  int n = g.order();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (are_twins(g, u, v)) return false;
  return true;
}

TwinDecomposition twin_decomposition(const Graph& g) {
  int n = g.order();
  // Twinness is an equivalence relation; a union-find closure keeps that a
  // runtime fact rather than an assumption.
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (are_twins(g, u, v)) {
        int a = find(u), b = find(v);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }

  TwinDecomposition td;
  std::vector<int> class_of_root(n, -1);
  td.vertex_class.assign(n, -1);
  for (int v = 0; v < n; ++v) {
    int root = find(v);
    if (class_of_root[root] < 0) {
      class_of_root[root] = static_cast<int>(td.classes.size());
      td.classes.emplace_back(n);
      td.representative.push_back(v);  // least vertex: scan order is ascending
    }
    int c = class_of_root[root];
    td.classes[c].set(v);
    td.vertex_class[v] = c;
  }

  int r = static_cast<int>(td.classes.size());
  td.omega = VertexSet(n);
  for (int c = 0; c < r; ++c) {
    const VertexSet& cls = td.classes[c];
    int size = cls.count();
    if (size == 1) {
      td.class_type.push_back(TwinType::kOne);
      continue;
    }
    bool clique = true, independent = true;
    for (int u : cls) {
      VertexSet inside = g.neighbors(u) & cls;
      if (inside.count() != size - 1) clique = false;
      if (!inside.empty()) independent = false;
    }
    if (!clique && !independent)
      throw std::logic_error("twin class neither a clique nor independent");
    td.class_type.push_back(clique ? TwinType::kClique : TwinType::kIndependent);
    for (int u : cls)
      if (u != td.representative[c]) td.omega.set(u);
  }

  std::vector<Edge> star_edges;
  for (int a = 0; a < r; ++a)
    for (int b = a + 1; b < r; ++b)
      if (g.adjacent(td.representative[a], td.representative[b])) star_edges.emplace_back(a, b);
  std::vector<std::string> star_labels;
  if (g.has_labels()) {
    star_labels.reserve(r);
    for (int c = 0; c < r; ++c) star_labels.push_back(g.label(td.representative[c]) + "*");
  }
  td.star = Graph(r, star_edges, std::move(star_labels));
  return td;
}

TildeGraph build_tilde(const Graph& g) {
  TwinDecomposition td = twin_decomposition(g);
  const Graph& star = td.star;
  int r = star.order();
  if (r == 2 && star.adjacent(0, 1))
    fail(Err::kStarIsK2, "build_tilde: the twin quotient is K_2");

  std::vector<int> attach_points;
  for (int c = 0; c < r; ++c) {
    if (td.class_type[c] == TwinType::kOne) continue;
    bool has_star_twin = false;
    for (int other = 0; other < r && !has_star_twin; ++other)
      if (other != c && are_twins(star, c, other)) has_star_twin = true;
    if (has_star_twin) attach_points.push_back(c);
  }

  int tilde_n = r + static_cast<int>(attach_points.size());
  std::vector<Edge> edges = star.edges();
  std::vector<std::string> labels;
  if (star.has_labels()) {
    labels.assign(star.labels().begin(), star.labels().end());
    labels.resize(tilde_n);
  }
  TildeGraph tg;
  tg.attach.assign(tilde_n, -1);
  for (size_t i = 0; i < attach_points.size(); ++i) {
    int pendant = r + static_cast<int>(i);
    edges.emplace_back(attach_points[i], pendant);
    tg.attach[pendant] = attach_points[i];
    if (!labels.empty()) labels[pendant] = "p(" + star.label(attach_points[i]) + ")";
  }
  tg.graph = Graph(tilde_n, edges, std::move(labels));
  tg.vstar = VertexSet(tilde_n);
  tg.pendants = VertexSet(tilde_n);
  for (int v = 0; v < r; ++v) tg.vstar.set(v);
  for (int v = r; v < tilde_n; ++v) tg.pendants.set(v);

  if (tilde_n > g.order())
    throw std::logic_error("build_tilde: companion graph larger than the input");
  if (!is_twin_free(tg.graph))
    fail(Err::kNotTwinFree,
         "build_tilde: companion graph has twins; the construction needs a connected input");
  return tg;
}

VertexSet lift_ld_set(const Graph& g, const TwinDecomposition& td, const TildeGraph& tg,
                      const VertexSet& s) {
  if (s.universe() != tg.graph.order())
    fail(Err::kBadParams, "lift_ld_set: set universe does not match the companion graph");
  if (!is_locating_dominating(tg.graph, s))
    fail(Err::kNotLocatingDominating, "lift_ld_set: input set is not locating-dominating");
  VertexSet out = td.omega;
  for (int u : s) {
    int cls = tg.attach[u] >= 0 ? tg.attach[u] : u;
    out.set(td.representative[cls]);
  }
  if (!is_locating_dominating(g, out))
    throw std::logic_error("lift_ld_set: lifted set failed the locating-dominating check");
  return out;
}

}  // namespace locdom
