#include "locdom/greedy.hpp"

#include <map>

#include "locdom/errors.hpp"
#include "locdom/invariants.hpp"
#include "locdom/twins.hpp"

namespace locdom {

std::vector<VertexSet> classes_under(const Graph& g, const VertexSet& d) {
  int n = g.order();
  std::map<int, VertexSet> singletons;
  std::map<std::vector<uint64_t>, VertexSet> by_code;
  for (int v = 0; v < n; ++v) {
    if (d.test(v)) {
      singletons.emplace(v, VertexSet::of(n, {v}));
      continue;
    }
    VertexSet code = g.neighbors(v) & d;
    auto [it, fresh] = by_code.try_emplace(code.words(), VertexSet(n));
    it->second.set(v);
  }
  std::map<int, VertexSet> ordered;
  for (auto& [v, s] : singletons) ordered.emplace(v, s);
  for (auto& [code, s] : by_code) ordered.emplace(s.first(), s);
  std::vector<VertexSet> out;
  out.reserve(ordered.size());
  for (auto& [least, s] : ordered) out.push_back(s);
  return out;
}

namespace {

struct State {
  VertexSet a, b, c;
  std::vector<VertexSet> classes;
  std::vector<int> class_of;
};

State recompute(const Graph& g, const VertexSet& a) {
  int n = g.order();
  State st{a, VertexSet(n), VertexSet(n), classes_under(g, a), std::vector<int>(n, -1)};
  for (size_t i = 0; i < st.classes.size(); ++i)
    for (int v : st.classes[i]) st.class_of[v] = static_cast<int>(i);
  for (int v = 0; v < n; ++v) {
    if (a.test(v)) continue;
    if (st.classes[st.class_of[v]].count() == 1)
      st.b.set(v);
    else
      st.c.set(v);
  }
  return st;
}

}  // namespace

GreedyPartition run_algorithm1(const Graph& g, int u0, GreedyTrace* trace) {
  int n = g.order();
  if (u0 < 0 || u0 >= n) fail(Err::kBadParams, "run_algorithm1: seed vertex out of range");
  if (!is_twin_free(g)) fail(Err::kNotTwinFree, "run_algorithm1 requires a twin-free graph");

  GreedyPartition gp;
  gp.u0 = u0;
  gp.a = VertexSet::of(n, {u0});
  gp.a_order = {u0};
  State st = recompute(g, gp.a);
  if (trace) trace->partitions.push_back(st.classes);

  int iterations = 0;
  for (;;) {
    // Lexicographically least (u,x,y): u,x,y pairwise distinct in C, the pair
    // {x,y} in one class, u adjacent to exactly one of them.
    int pu = -1;
    for (int u : st.c) {
      for (int x : st.c) {
        if (x == u) continue;
        for (int y = st.c.next(x); y >= 0; y = st.c.next(y)) {
          if (y == u) continue;
          if (st.class_of[x] != st.class_of[y]) continue;
          if (g.adjacent(u, x) != g.adjacent(u, y)) {
            pu = u;
            break;
          }
        }
        if (pu >= 0) break;
      }
      if (pu >= 0) break;
    }
    if (pu < 0) break;

    size_t before = st.classes.size();
    gp.a.set(pu);
    gp.a_order.push_back(pu);
    st = recompute(g, gp.a);
    if (trace) trace->partitions.push_back(st.classes);
    if (st.classes.size() <= before)
      throw std::logic_error("run_algorithm1: iteration did not refine the partition");
    if (++iterations > n - 1)
      throw std::logic_error("run_algorithm1: exceeded the refinement iteration bound");
  }

  gp.b = st.b;
  gp.c = st.c;
  return gp;
}

std::array<VertexSet, 3> greedy_distinguishing_sets(const GreedyPartition& gp) {
  return {gp.a | gp.b, gp.a | gp.c, gp.b | gp.c};
}

std::array<VertexSet, 2> greedy_determining_sets(const GreedyPartition& gp) {
  return {gp.a, gp.b | gp.c};
}

VertexSet greedy_ld_set(const Graph& g, const GreedyPartition& gp) {
  auto unions = greedy_distinguishing_sets(gp);
  const VertexSet* smallest = &unions[0];
  for (const VertexSet& u : unions)
    if (u.count() < smallest->count()) smallest = &u;
  return complete_to_ld(g, *smallest);
}

}  // namespace locdom
