#ifndef LOCDOM_AUTOMORPHISM_HPP
#define LOCDOM_AUTOMORPHISM_HPP

// Automorphism machinery: pointwise stabilizer checks, determining sets and
// the exact determining number, vertex orbits. Backtracking over an
// iteratively refined vertex partition; no canonical forms, no external
// canonical-labeling dependency.

#include <optional>
#include <vector>

#include "locdom/graph.hpp"
#include "locdom/invariants.hpp"

namespace locdom {

struct AutomorphismWitness {
  std::vector<int> perm;
};

bool is_automorphism(const Graph& g, const std::vector<int>& perm);

// Some non-identity automorphism fixing every vertex of `fixed`, or nullopt
// when the pointwise stabilizer is trivial.
std::optional<AutomorphismWitness> nontrivial_automorphism_fixing(const Graph& g,
                                                                  const VertexSet& fixed);

bool is_determining(const Graph& g, const VertexSet& s);

// Exact determining number. The scan starts at n - r (r = number of twin
// classes) and every non-singleton twin class contributes all but its least
// vertex up front.
InvariantResult determining_number(const Graph& g, const SolverOptions& opt = {});

// Vertex orbits under the full automorphism group, grown by closing
// refinement cells under discovered automorphisms.
std::vector<VertexSet> orbits(const Graph& g, const SolverOptions& opt = {});

// One round of invariant color refinement to a fixpoint: colors start from
// `initial` and split on (color, multiset of neighbor colors). The returned
// ids depend only on the isomorphism type when the initial colors do.
std::vector<int> equitable_colors(const Graph& g, const std::vector<int>& initial);

}  // namespace locdom

#endif
