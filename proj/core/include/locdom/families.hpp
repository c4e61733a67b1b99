#ifndef LOCDOM_FAMILIES_HPP
#define LOCDOM_FAMILIES_HPP

// Deterministic generators for the named graph families, with vertex labels
// matching their conventional names.

#include <string>
#include <vector>

#include "locdom/graph.hpp"

namespace locdom {

enum class Family { kPath, kCycle, kComplete, kStar, kWheel, kTr, kGr, kHr, kTqs };

struct FamilySpec {
  Family name;
  std::vector<int> params;
};

// Parses "path", "cycle", "complete", "star", "wheel", "t_r", "g_r", "h_r",
// "t_qs" (case-insensitive, underscores optional).
Family family_from_string(const std::string& name);
std::string family_to_string(Family f);

Graph gen(const FamilySpec& spec);

Graph gen_path(int n);
Graph gen_cycle(int n);
Graph gen_complete(int n);
Graph gen_star(int leaves);
// Hub vertex 0 joined to a cycle on 1..rim.
Graph gen_wheel(int rim);

// The path (u1..ur) with a pendant u0 on u3; r >= 6. Vertex i is u_i.
Graph gen_tr(int r);
// T_r with one pendant per vertex; order 2r+2.
Graph gen_gr(int r);
// G_r plus a second pendant v0' on u0; order 2r+3.
Graph gen_hr(int r);

// Spine tree of q vertices, each carrying a 7-vertex bush; order 7q+s with
// q >= 7 and 0 <= s < 7. s in 1..3 stretches one spine edge into a path,
// s in 4..6 hangs a path off spine vertex u1.
Graph gen_tqs(int q, int s);

// Order-n graph (n >= 14) attaining the dimension-vs-determining gap
// floor(n/2)-1: the complement of G_r when n is even, of H_r when n is odd.
// The complement of the returned graph attains the locating-domination gap
// floor(n/2).
Graph dim_det_gap_witness(int n);

}  // namespace locdom

#endif
