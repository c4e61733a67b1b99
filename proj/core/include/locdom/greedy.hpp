#ifndef LOCDOM_GREEDY_HPP
#define LOCDOM_GREEDY_HPP

// The greedy A/B/C partition of a twin-free graph: grows A from a seed
// vertex while some pair outside can still be split, then reads three
// distinguishing sets, two determining sets and a locating-dominating set
// off the partition.

#include <array>
#include <vector>

#include "locdom/graph.hpp"

namespace locdom {

struct GreedyPartition {
  VertexSet a, b, c;
  std::vector<int> a_order;  // insertion order of A; a_order[0] == u0
  int u0 = 0;
};

// Per-iteration snapshot used by the verification harness.
struct GreedyTrace {
  // Vertex classes after each recomputation (initial state first).
  std::vector<std::vector<VertexSet>> partitions;
};

// Equivalence classes of "no vertex of d tells u and v apart". Members of d
// are singletons; the rest group by their adjacency code into d. Classes
// come back ascending by least vertex.
std::vector<VertexSet> classes_under(const Graph& g, const VertexSet& d);

// Deterministic run: among all valid (u,x,y) triples the lexicographically
// least one is applied. Requires a twin-free graph; finishes within n-1
// iterations because every step splits a class.
GreedyPartition run_algorithm1(const Graph& g, int u0, GreedyTrace* trace = nullptr);

// {A+B, A+C, B+C}, each a distinguishing set.
std::array<VertexSet, 3> greedy_distinguishing_sets(const GreedyPartition& gp);

// {A, B+C}, each a determining set; the smaller has at most n/2 vertices.
std::array<VertexSet, 2> greedy_determining_sets(const GreedyPartition& gp);

// The smallest of the three unions, completed to a locating-dominating set;
// size at most 2n/3 + 1.
VertexSet greedy_ld_set(const Graph& g, const GreedyPartition& gp);

}  // namespace locdom

#endif
