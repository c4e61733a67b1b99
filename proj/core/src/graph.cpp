#include "locdom/graph.hpp"

#include <deque>

#include "locdom/errors.hpp"

namespace locdom {

Graph::Graph(int n, const std::vector<Edge>& edges, std::vector<std::string> labels)
    : n_(n), labels_(std::move(labels)) {
  if (n < 0) fail(Err::kBadParams, "negative vertex count");
  if (!labels_.empty() && static_cast<int>(labels_.size()) != n)
    fail(Err::kBadParams, "label array length differs from vertex count");
  adj_.assign(n, VertexSet(n));
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      fail(Err::kInvalidEdge, "edge endpoint out of range: (" + std::to_string(u) + "," +
                                  std::to_string(v) + ") with n=" + std::to_string(n));
    if (u == v) fail(Err::kInvalidEdge, "self-loop at vertex " + std::to_string(u));
    adj_[u].set(v);
    adj_[v].set(u);
  }
  for (int v = 0; v < n; ++v) m_ += adj_[v].count();
  m_ /= 2;
}

int Graph::min_degree() const {
  int d = n_ == 0 ? 0 : n_;
  for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
  return d;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> e;
  e.reserve(m_);
  for (int u = 0; u < n_; ++u)
    for (int v = adj_[u].next(u); v >= 0; v = adj_[u].next(v)) e.emplace_back(u, v);
  return e;
}

std::string Graph::label(int v) const {
  if (v >= 0 && v < static_cast<int>(labels_.size()) && !labels_[v].empty()) return labels_[v];
  return std::to_string(v);
}

Graph Graph::with_labels(std::vector<std::string> labels) const {
  return Graph(n_, edges(), std::move(labels));
}

Graph build_graph(int n, const std::vector<Edge>& edges) { return Graph(n, edges); }

Graph complement(const Graph& g) {
  int n = g.order();
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) e.emplace_back(u, v);
  return Graph(n, e, g.labels());
}

Graph corona_k1(const Graph& g) {
  int n = g.order();
  std::vector<Edge> e = g.edges();
  for (int v = 0; v < n; ++v) e.emplace_back(v, v + n);
  std::vector<std::string> labels(2 * n);
  for (int v = 0; v < n; ++v) {
    labels[v] = g.has_labels() ? g.label(v) : std::to_string(v);
    labels[v + n] = "v" + std::to_string(v);
  }
  return Graph(2 * n, e, std::move(labels));
}

bool is_connected(const Graph& g) {
  int n = g.order();
  if (n <= 1) return true;
  VertexSet seen(n);
  seen.set(0);
  std::deque<int> queue{0};
  int reached = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int u : g.neighbors(v)) {
      if (!seen.test(u)) {
        seen.set(u);
        ++reached;
        queue.push_back(u);
      }
    }
  }
  return reached == n;
}

std::optional<Edge> common_neighbor_excess(const Graph& g, int k) {
  if (k < 1) fail(Err::kBadParams, "common neighbor threshold must be >= 1");
  int n = g.order();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if ((g.neighbors(u) & g.neighbors(v)).count() >= k) return Edge{u, v};
  return std::nullopt;
}

DistanceMatrix distances(const Graph& g) {
  int n = g.order();
  std::vector<int> d(static_cast<size_t>(n) * n, DistanceMatrix::kInfinity);
  std::vector<int> frontier, next;
  for (int s = 0; s < n; ++s) {
    int* row = d.data() + static_cast<size_t>(s) * n;
    row[s] = 0;
    frontier.assign(1, s);
    int depth = 0;
    while (!frontier.empty()) {
      ++depth;
      next.clear();
      for (int v : frontier)
        for (int u : g.neighbors(v))
          if (row[u] == DistanceMatrix::kInfinity) {
            row[u] = depth;
            next.push_back(u);
          }
      frontier.swap(next);
    }
  }
  return DistanceMatrix(n, std::move(d));
}

}  // namespace locdom
