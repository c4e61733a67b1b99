#ifndef LOCDOM_GRAPH_HPP
#define LOCDOM_GRAPH_HPP

// Immutable simple undirected graph over vertices 0..n-1 with bitset
// adjacency rows. Vertices may carry string labels so generated family
// members keep their conventional names in reports.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "locdom/vertex_set.hpp"

namespace locdom {

using Edge = std::pair<int, int>;

class Graph {
 public:
  Graph() = default;

  // Duplicate edges collapse; endpoints out of range or self-loops throw
  // Err::kInvalidEdge.
  Graph(int n, const std::vector<Edge>& edges, std::vector<std::string> labels = {});

  int order() const { return n_; }
  int edge_count() const { return m_; }

  bool adjacent(int u, int v) const { return adj_[u].test(v); }
  const VertexSet& neighbors(int v) const { return adj_[v]; }
  VertexSet closed_neighborhood(int v) const {
    VertexSet s = adj_[v];
    s.set(v);
    return s;
  }

  int degree(int v) const { return adj_[v].count(); }
  int min_degree() const;

  std::vector<Edge> edges() const;  // u < v, sorted

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  // Label when present, else the vertex index.
  std::string label(int v) const;

  Graph with_labels(std::vector<std::string> labels) const;

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<VertexSet> adj_;
  std::vector<std::string> labels_;
};

Graph build_graph(int n, const std::vector<Edge>& edges);

// Edge set becomes exactly the non-edges; order and labels are kept.
Graph complement(const Graph& g);

// Attach a pendant to every vertex: pendant i + n(g) hangs off vertex i and
// is labeled "v<i>".
Graph corona_k1(const Graph& g);

bool is_connected(const Graph& g);

// Some pair {u,v} with at least k common neighbors, or nullopt. A graph has
// no K_{2,k} subgraph iff this returns nullopt; k = 2 is the C4 test.
std::optional<Edge> common_neighbor_excess(const Graph& g, int k);

class DistanceMatrix {
 public:
  static constexpr int kInfinity = 1 << 29;

  DistanceMatrix() = default;
  DistanceMatrix(int n, std::vector<int> d) : n_(n), d_(std::move(d)) {}

  int order() const { return n_; }
  int at(int u, int v) const { return d_[static_cast<size_t>(u) * n_ + v]; }

 private:
  int n_ = 0;
  std::vector<int> d_;
};

// BFS hop distances; kInfinity across components.
DistanceMatrix distances(const Graph& g);

}  // namespace locdom

#endif
