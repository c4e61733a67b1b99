#ifndef LOCDOM_MATCHING_HPP
#define LOCDOM_MATCHING_HPP

// Maximum matchings via odd-cycle contraction, the three-way classification
// of matched edges against the unmatched set, the exchange loop that empties
// U_M, and the V1 locating-dominating construction for C4-free graphs.

#include <vector>

#include "locdom/graph.hpp"

namespace locdom {

struct Matching {
  std::vector<Edge> edges;  // u < v, sorted
  VertexSet unmatched;      // vertices in no matching edge
};

// Validates pairwise disjointness and membership, fills in the unmatched set.
Matching make_matching(const Graph& g, std::vector<Edge> edges);

// Exact maximum matching (blossom contraction); |edges| is the matching
// number.
Matching maximum_matching(const Graph& g);

// U_M: unmatched vertices with at least one neighbor whose whole
// neighborhood sits inside a single matching edge.
VertexSet um_set(const Graph& g, const Matching& m);

// For a maximum matching, every matched edge {u,v} falls into exactly one
// case against the unmatched vertices:
//   1 - neither endpoint has unmatched neighbors,
//   2 - exactly one endpoint has unmatched neighbors,
//   3 - both see the same single unmatched vertex.
// Any other configuration exposes an augmenting pair -> Err::kNotMaximum.
int edge_case(const Graph& g, const Matching& m, Edge e);

// Rebuilds a maximum matching of a twin-free graph into one with empty U_M,
// one exchange per step, cardinality unchanged.
Matching eliminate_um(const Graph& g, const Matching& m);

struct MatchedPartition {
  VertexSet v1, v2;
  Matching matching;
};

// Splits the matched edges of a twin-free, C4-free, connected graph so that
// the V1 side is a locating-dominating set of size equal to the matching
// number, with every unmatched vertex 2-dominated by V1.
MatchedPartition v1_construction(const Graph& g);

}  // namespace locdom

#endif
