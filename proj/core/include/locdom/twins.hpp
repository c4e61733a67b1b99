#ifndef LOCDOM_TWINS_HPP
#define LOCDOM_TWINS_HPP

// Twin equivalence classes, the quotient graph G*, the surplus set
// Omega, and the twin-free companion graph with its pendant labeling.

#include <vector>

#include "locdom/graph.hpp"

namespace locdom {

enum class TwinType { kOne, kClique, kIndependent };

// u,v are twins when N(u)=N(v) or N[u]=N[v].
bool are_twins(const Graph& g, int u, int v);
bool is_twin_free(const Graph& g);

struct TwinDecomposition {
  std::vector<VertexSet> classes;   // partition of V(G), ordered by least vertex
  std::vector<TwinType> class_type;
  std::vector<int> representative;  // least vertex of each class
  std::vector<int> vertex_class;    // class index per vertex
  Graph star;                       // quotient graph on the classes
  VertexSet omega;                  // all but the representative of each non-singleton class

  int order() const { return star.order(); }
};

TwinDecomposition twin_decomposition(const Graph& g);

// The companion graph: the quotient plus one pendant on every non-singleton
// class vertex that still has a twin inside the quotient. Pendants are
// numbered after the quotient vertices, ascending by attachment.
struct TildeGraph {
  Graph graph;
  VertexSet vstar;     // the quotient copies
  VertexSet pendants;
  std::vector<int> attach;  // pendant -> its quotient neighbor; -1 elsewhere
};

// Requires the quotient not to be K_2. The construction is checked to come
// out twin-free and no larger than g; inputs outside its domain (only
// reachable through disconnected graphs) surface as Err::kNotTwinFree.
TildeGraph build_tilde(const Graph& g);

// Maps a locating-dominating set of the companion graph back onto g:
// projects every chosen vertex to its class representative and adds omega.
// The result is locating-dominating on g with size <= |s| + |omega|.
VertexSet lift_ld_set(const Graph& g, const TwinDecomposition& td, const TildeGraph& tg,
                      const VertexSet& s);

}  // namespace locdom

#endif
