#ifndef LOCDOM_INVARIANTS_HPP
#define LOCDOM_INVARIANTS_HPP

// Set predicates and exact values for the non-automorphism invariants:
// metric dimension, locating-domination number, (k-)domination numbers,
// upper domination number, independence/clique/chromatic numbers, and the
// minimal-dominating-set complement construction.

#include <chrono>
#include <optional>
#include <vector>

#include "locdom/graph.hpp"

namespace locdom {

enum class Method { kSubsetSearch, kFormula, kConstruction };

struct InvariantResult {
  int value = 0;
  VertexSet witness;
  Method method = Method::kSubsetSearch;
  // Chromatic solver only: color per vertex, 0..value-1.
  std::vector<int> coloring;
};

// Exceeding the cap raises Err::kCapExceeded instead of running an open-ended
// search; exceeding the optional budget raises Err::kTimeout.
struct SolverOptions {
  std::optional<int> cap;
  std::optional<std::chrono::milliseconds> time_budget;
};

inline constexpr int kSubsetSearchCap = 24;
inline constexpr int kUpperDominationCap = 18;
inline constexpr int kDeterminingCap = 20;
inline constexpr int kDeterminingTreeCap = 50;

// -- resolving ---------------------------------------------------------------

// d(u,x) != d(u,y); the graph must be connected.
bool resolves(const Graph& g, int u, int x, int y);
bool resolves(const DistanceMatrix& d, int u, int x, int y);

bool is_resolving(const Graph& g, const VertexSet& s);

// Exact minimum resolving set. Cardinalities are scanned upward; every twin
// class contributes all but its least vertex up front (no vertex outside a
// twin class resolves that class's pairs).
InvariantResult metric_dimension(const Graph& g, const SolverOptions& opt = {});

// -- distinguishing / locating-dominating ------------------------------------

// u is one of {x,y} or adjacent to exactly one of them.
bool distinguishes(const Graph& g, int u, int x, int y);
bool is_distinguishing(const Graph& g, const VertexSet& d);

bool is_dominating(const Graph& g, const VertexSet& d);
bool is_k_dominating(const Graph& g, const VertexSet& d, int k);
bool is_minimal_dominating(const Graph& g, const VertexSet& d);

bool is_locating_dominating(const Graph& g, const VertexSet& d);

InvariantResult location_domination_number(const Graph& g, const SolverOptions& opt = {});

// At most one vertex can be undominated by a distinguishing set; adds it.
VertexSet complete_to_ld(const Graph& g, const VertexSet& d);

// -- domination --------------------------------------------------------------

InvariantResult domination_number(const Graph& g, const SolverOptions& opt = {});
InvariantResult k_domination_number(const Graph& g, int k, const SolverOptions& opt = {});

// Maximum cardinality of a minimal dominating set, by full enumeration.
InvariantResult upper_domination_number(const Graph& g, const SolverOptions& opt = {});

// V(G) \ d for a minimal dominating set d of a twin-free graph without
// isolated vertices; the result is checked to be locating-dominating.
VertexSet ore_complement_ld(const Graph& g, const VertexSet& d);

// -- classical parameters ----------------------------------------------------

InvariantResult independence_number(const Graph& g, const SolverOptions& opt = {});
InvariantResult clique_number(const Graph& g, const SolverOptions& opt = {});
// Iterative-deepening k-colorability, saturation-first vertex order with
// index tie-breaks. The coloring comes back in InvariantResult::coloring.
InvariantResult chromatic_number(const Graph& g, const SolverOptions& opt = {});

}  // namespace locdom

#endif
