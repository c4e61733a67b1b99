#include <doctest.h>

#include "locdom/automorphism.hpp"
#include "locdom/corpus.hpp"
#include "locdom/errors.hpp"
#include "locdom/families.hpp"
#include "locdom/greedy.hpp"
#include "locdom/invariants.hpp"
#include "locdom/twins.hpp"

using namespace locdom;

TEST_CASE("classes_under") {
  Graph p4 = gen_path(4);

  auto all = classes_under(p4, VertexSet::full(4));
  CHECK(all.size() == 4);

  auto none = classes_under(p4, VertexSet(4));
  REQUIRE(none.size() == 1);
  CHECK(none[0] == VertexSet::full(4));

  auto one = classes_under(p4, VertexSet::of(4, {0}));
  REQUIRE(one.size() == 3);
  CHECK(one[0] == VertexSet::of(4, {0}));
  CHECK(one[1] == VertexSet::of(4, {1}));
  CHECK(one[2] == VertexSet::of(4, {2, 3}));
}

TEST_CASE("the partition run on a path") {
  GreedyPartition gp = run_algorithm1(gen_path(4), 0);
  CHECK(gp.a == VertexSet::of(4, {0}));
  CHECK(gp.b == VertexSet::of(4, {1}));
  CHECK(gp.c == VertexSet::of(4, {2, 3}));
  CHECK(gp.a_order == std::vector<int>{0});
  CHECK(is_distinguishing(gen_path(4), gp.a | gp.b));
}

TEST_CASE("partition errors") {
  CHECK_THROWS_AS(run_algorithm1(gen_cycle(4), 0), Error);    // twins
  CHECK_THROWS_AS(run_algorithm1(gen_path(4), 7), Error);     // seed out of range
}

TEST_CASE("derived sets pass their predicates for every seed on small graphs") {
  std::vector<Graph> corpus_graphs;
  for (int n = 4; n <= 6; ++n)
    for (const Graph& g : corpus::all_graphs(n))
      if (is_twin_free(g)) corpus_graphs.push_back(g);
  REQUIRE(!corpus_graphs.empty());

  for (const Graph& g : corpus_graphs) {
    for (int u0 = 0; u0 < g.order(); ++u0) {
      GreedyPartition gp = run_algorithm1(g, u0);
      CHECK((gp.a | gp.b | gp.c) == VertexSet::full(g.order()));
      CHECK(gp.a.count() + gp.b.count() + gp.c.count() == g.order());

      auto unions = greedy_distinguishing_sets(gp);
      for (const VertexSet& u : unions) CHECK(is_distinguishing(g, u));

      auto dets = greedy_determining_sets(gp);
      CHECK(is_determining(g, dets[0]));
      CHECK(is_determining(g, dets[1]));
      CHECK(std::min(dets[0].count(), dets[1].count()) <= g.order() / 2);

      VertexSet ld = greedy_ld_set(g, gp);
      CHECK(is_locating_dominating(g, ld));
      CHECK(ld.count() <= 2 * g.order() / 3 + 1);
    }
  }
}

TEST_CASE("greedy sets on the corona family") {
  Graph g6 = gen_gr(6);
  GreedyPartition gp = run_algorithm1(g6, 0);
  for (const VertexSet& u : greedy_distinguishing_sets(gp)) CHECK(is_distinguishing(g6, u));

  Graph h6 = gen_hr(6);
  // H_6 has twins, so the partition refuses it; its rigid sibling works
  CHECK_THROWS_AS(run_algorithm1(h6, 0), Error);
}

TEST_CASE("greedy LD set against the exact solver") {
  corpus::Rng rng(51);
  for (int i = 0; i < 25; ++i) {
    auto g = corpus::random_connected_twin_free(rng, 8 + (i % 5), 0.4);
    REQUIRE(g.has_value());
    GreedyPartition gp = run_algorithm1(*g, 0);
    VertexSet ld = greedy_ld_set(*g, gp);
    CHECK(ld.count() >= location_domination_number(*g).value);
    CHECK(ld.count() <= 2 * g->order() / 3 + 1);
  }
}

TEST_CASE("insertion order drives the trace") {
  corpus::Rng rng(53);
  auto g = corpus::random_connected_twin_free(rng, 10, 0.3);
  REQUIRE(g.has_value());
  GreedyTrace trace;
  GreedyPartition gp = run_algorithm1(*g, 0, &trace);
  CHECK(gp.a_order.size() == trace.partitions.size());
  CHECK(gp.a_order[0] == 0);
  CHECK(static_cast<int>(gp.a_order.size()) - 1 <= g->order() - 1);
  for (size_t t = 0; t + 1 < trace.partitions.size(); ++t)
    CHECK(trace.partitions[t + 1].size() > trace.partitions[t].size());
}
