#ifndef LOCDOM_CORPUS_HPP
#define LOCDOM_CORPUS_HPP

// Test corpora: exhaustive small-order enumeration up to isomorphism
// (dependency-free, via the refinement certificate), exhaustive trees, and
// seeded random generators whose output is stable across platforms.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "locdom/graph.hpp"

namespace locdom::corpus {

// Canonically relabeled copy: minimum adjacency encoding over all
// relabelings that respect the refinement color classes. Equal outputs
// exactly characterize isomorphic inputs.
Graph canonical_form(const Graph& g);

// graph6 of the canonical form; doubles as a stable corpus id.
std::string canonical_key(const Graph& g);

// All graphs of the given order up to isomorphism, sorted by canonical key.
// Guarded at order 8: beyond that the certificate enumeration is the wrong
// tool.
std::vector<Graph> all_graphs(int n);
std::vector<Graph> all_connected_graphs(int n);

// All trees of the given order up to isomorphism (center-rooted canonical
// encoding); guarded at order 16.
std::vector<Graph> all_trees(int n);

// Deterministic RNG wrapper. Draws bypass the distribution templates in the
// standard library, whose output is implementation-defined.
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}
  uint64_t next() { return eng_(); }
  int below(int n) { return static_cast<int>(next() % static_cast<uint64_t>(n)); }
  bool coin(double p) {
    return next() < static_cast<uint64_t>(p * 18446744073709551616.0);
  }

 private:
  std::mt19937_64 eng_;
};

Graph random_graph(Rng& rng, int n, double p);
Graph random_tree(Rng& rng, int n);  // uniform labeled trees via Prüfer decoding

std::optional<Graph> random_connected_twin_free(Rng& rng, int n, double p, int tries = 2000);

// Connected twin-free graph with no pair of vertices sharing k common
// neighbors: a random tree plus edge insertions that keep the property.
std::optional<Graph> random_twin_free_k2k_free(Rng& rng, int n, int k, int extra_edges,
                                               int tries = 2000);

}  // namespace locdom::corpus

#endif
