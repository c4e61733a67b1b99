#ifndef LOCDOM_TREES_HPP
#define LOCDOM_TREES_HPP

// Linear-time tree analysis: exterior major vertices with their terminal
// legs, the metric-dimension formula, and the pendant-symmetry lower bound
// on the determining number.

#include <vector>

#include "locdom/graph.hpp"
#include "locdom/invariants.hpp"

namespace locdom {

bool is_tree(const Graph& g);

struct MajorVertexInfo {
  int vertex = -1;
  // Terminal leaves with their leg lengths, ascending by leaf index.
  std::vector<std::pair<int, int>> terminals;
  int ter = 0;        // number of terminals
  int ter_prime = 0;  // number of distinct leg lengths
  VertexSet leg_vertices;  // every vertex on a leg, the major vertex included
  int n_u = 0;             // |leg_vertices|
};

struct TreeAnalysis {
  bool is_path = false;
  std::vector<MajorVertexInfo> exterior_majors;  // ascending by vertex
};

// Walks each leaf toward its nearest vertex of degree >= 3.
TreeAnalysis analyze_tree(const Graph& g);

// Exact metric dimension of a tree: sum of (ter - 1) over exterior major
// vertices; paths short-circuit. The witness keeps all but one terminal per
// major vertex and is re-checked against the resolving predicate.
InvariantResult tree_metric_dimension(const Graph& g);

// Sum of (ter - ter') over exterior major vertices; never exceeds the
// determining number.
int tree_det_lower_bound(const Graph& g);

// Checks 7*ter'(u) <= 2*n_u + 7 at every exterior major vertex.
bool terprime_bound_check(const Graph& g);

}  // namespace locdom

#endif
