#include <doctest.h>

#include "locdom/automorphism.hpp"
#include "locdom/corpus.hpp"
#include "locdom/errors.hpp"
#include "locdom/families.hpp"
#include "locdom/invariants.hpp"
#include "locdom/twins.hpp"
#include "oracles.hpp"

using namespace locdom;

TEST_CASE("resolves") {
  Graph p4 = gen_path(4);
  CHECK(resolves(p4, 0, 1, 2));
  CHECK(resolves(p4, 1, 1, 3));  // membership: d(u,u)=0
  Graph c4 = gen_cycle(4);
  CHECK(!resolves(c4, 0, 1, 3));  // both neighbors of the antipode
  CHECK_THROWS_AS(resolves(build_graph(2, {}), 0, 0, 1), Error);
}

TEST_CASE("is_resolving") {
  Graph p4 = gen_path(4);
  CHECK(is_resolving(p4, VertexSet::of(4, {0})));  // an endpoint resolves a path
  Graph k4 = gen_complete(4);
  CHECK(!is_resolving(k4, VertexSet::of(4, {0, 1})));
  CHECK(is_resolving(gen_cycle(4), VertexSet::of(4, {0, 1})));
}

TEST_CASE("metric_dimension") {
  for (int n = 2; n <= 8; ++n) CHECK(metric_dimension(gen_path(n)).value == 1);
  CHECK(metric_dimension(build_graph(1, {})).value == 0);
  CHECK(metric_dimension(gen_complete(5)).value == 4);

  SUBCASE("matches the subset-scan oracle") {
    for (int n = 2; n <= 6; ++n)
      for (const Graph& g : corpus::all_connected_graphs(n)) {
        InvariantResult r = metric_dimension(g);
        CHECK(r.value == oracles::min_resolving_set(g));
        CHECK(r.witness.count() == r.value);
        CHECK(is_resolving(g, r.witness));
      }
    corpus::Rng rng(23);
    for (int i = 0; i < 30; ++i) {
      auto g = corpus::random_connected_twin_free(rng, 8, 0.4);
      REQUIRE(g.has_value());
      CHECK(metric_dimension(*g).value == oracles::min_resolving_set(*g));
    }
  }

  SUBCASE("rejects disconnected and oversized inputs") {
    CHECK_THROWS_AS(metric_dimension(build_graph(3, {{0, 1}})), Error);
    try {
      metric_dimension(gen_path(30));
    } catch (const Error& e) {
      CHECK(e.kind() == Err::kCapExceeded);
    }
  }
}

TEST_CASE("distinguishes and is_distinguishing") {
  Graph p4 = gen_path(4);
  CHECK(distinguishes(p4, 1, 1, 3));   // membership clause
  CHECK(distinguishes(p4, 1, 0, 3));   // adjacent to exactly one
  CHECK(!distinguishes(p4, 1, 0, 2));  // adjacent to both

  CHECK(is_distinguishing(build_graph(2, {{0, 1}}), VertexSet::of(2, {0})));
  CHECK(is_distinguishing(p4, VertexSet::of(4, {1, 2})));
  // twin leaves outside the set are never distinguished
  Graph star = gen_star(3);
  CHECK(!is_distinguishing(star, VertexSet::of(4, {0})));
}

TEST_CASE("domination predicates") {
  Graph k4 = gen_complete(4);
  CHECK(is_dominating(k4, VertexSet::of(4, {0})));
  Graph c4 = gen_cycle(4);
  CHECK(!is_k_dominating(c4, VertexSet::of(4, {0, 1}), 2));
  CHECK(is_k_dominating(c4, VertexSet::of(4, {0, 2}), 2));
  CHECK_THROWS_AS(is_k_dominating(c4, VertexSet(4), 0), Error);

  CHECK(is_minimal_dominating(gen_path(4), VertexSet::of(4, {1, 2})));
  CHECK(!is_minimal_dominating(gen_path(4), VertexSet::of(4, {0, 1, 2})));
}

TEST_CASE("is_locating_dominating") {
  for (int n = 3; n <= 6; ++n) {
    VertexSet most = VertexSet::full(n);
    most.reset(n - 1);
    CHECK(is_locating_dominating(gen_complete(n), most));
  }
  Graph p4 = gen_path(4);
  CHECK(!is_locating_dominating(p4, VertexSet::of(4, {0})));  // 2 and 3 share the empty code
  CHECK(is_locating_dominating(p4, VertexSet::of(4, {0, 3})));
  CHECK(is_locating_dominating(gen_gr(6), VertexSet::of(14, {0, 1, 2, 3, 4, 5, 6})));
}

TEST_CASE("location_domination_number") {
  CHECK(location_domination_number(gen_complete(5)).value == 4);
  CHECK(location_domination_number(build_graph(1, {})).value == 1);
  CHECK(location_domination_number(gen_gr(6)).value == 7);

  for (int n = 2; n <= 6; ++n)
    for (const Graph& g : corpus::all_connected_graphs(n)) {
      InvariantResult r = location_domination_number(g);
      CHECK(r.value == oracles::min_locating_dominating_set(g));
      CHECK(is_locating_dominating(g, r.witness));
    }
}

TEST_CASE("complete_to_ld") {
  Graph p4 = gen_path(4);
  VertexSet d = VertexSet::of(4, {0, 3});
  CHECK(complete_to_ld(p4, d) == d);  // already dominating

  Graph p3 = gen_path(3);
  VertexSet out = complete_to_ld(p3, VertexSet::of(3, {2}));
  CHECK(out == VertexSet::of(3, {0, 2}));  // the one undominated vertex joins

  CHECK_THROWS_AS(complete_to_ld(p4, VertexSet::of(4, {0})), Error);

  // any co-singleton set is distinguishing; completion is locating-dominating
  for (const Graph& g : corpus::all_connected_graphs(5))
    for (int v = 0; v < 5; ++v) {
      VertexSet s = VertexSet::full(5);
      s.reset(v);
      CHECK(is_locating_dominating(g, complete_to_ld(g, s)));
    }
}

TEST_CASE("domination numbers") {
  for (int n = 2; n <= 6; ++n) CHECK(domination_number(gen_complete(n)).value == 1);
  CHECK(k_domination_number(gen_cycle(4), 2).value == 2);

  for (const Graph& g : corpus::all_connected_graphs(5)) {
    InvariantResult gamma = domination_number(g);
    CHECK(gamma.value == oracles::min_dominating_set(g));
    CHECK(is_dominating(g, gamma.witness));
    InvariantResult gamma2 = k_domination_number(g, 2);
    CHECK(gamma2.value == oracles::min_k_dominating_set(g, 2));
    CHECK(is_k_dominating(g, gamma2.witness, 2));
  }

  // monotone in k
  corpus::Rng rng(5);
  for (int i = 0; i < 20; ++i) {
    Graph g = corpus::random_graph(rng, 9, 0.5);
    int g1 = domination_number(g).value;
    int g2 = k_domination_number(g, 2).value;
    int g3 = k_domination_number(g, 3).value;
    CHECK(g1 <= g2);
    CHECK(g2 <= g3);
    CHECK(k_domination_number(g, 1).value == g1);
  }
}

TEST_CASE("upper domination number") {
  for (int n = 2; n <= 6; ++n) CHECK(upper_domination_number(gen_complete(n)).value == 1);
  CHECK(upper_domination_number(gen_cycle(4)).value == 2);
  for (int k = 3; k <= 5; ++k) CHECK(upper_domination_number(gen_star(k)).value == k);

  for (const Graph& g : corpus::all_connected_graphs(5)) {
    InvariantResult r = upper_domination_number(g);
    CHECK(r.value == oracles::max_minimal_dominating_set(g));
    CHECK(is_minimal_dominating(g, r.witness));
  }
}

TEST_CASE("ore complement construction") {
  Graph p4 = gen_path(4);
  CHECK(ore_complement_ld(p4, VertexSet::of(4, {1, 2})) == VertexSet::of(4, {0, 3}));

  CHECK_THROWS_AS(ore_complement_ld(gen_cycle(4), VertexSet::of(4, {0, 2})), Error);  // twins
  CHECK_THROWS_AS(ore_complement_ld(p4, VertexSet::of(4, {0, 1, 2})), Error);  // not minimal
  Graph with_isolated = build_graph(5, {{0, 1}, {1, 2}, {2, 3}});
  REQUIRE(is_twin_free(with_isolated));
  CHECK_THROWS_AS(ore_complement_ld(with_isolated, VertexSet::of(5, {1, 2, 4})), Error);

  // a maximum independent set is minimal dominating, so the complement works
  for (const Graph& g : corpus::all_connected_graphs(6)) {
    if (!is_twin_free(g)) continue;
    InvariantResult alpha = independence_number(g);
    VertexSet out = ore_complement_ld(g, alpha.witness);
    CHECK(out.count() == g.order() - alpha.value);
    CHECK(is_locating_dominating(g, out));
  }
}

TEST_CASE("classical parameters") {
  for (int n = 2; n <= 6; ++n) {
    CHECK(independence_number(gen_complete(n)).value == 1);
    CHECK(clique_number(gen_complete(n)).value == n);
    CHECK(chromatic_number(gen_complete(n)).value == n);
  }
  CHECK(independence_number(gen_cycle(5)).value == 2);
  CHECK(chromatic_number(gen_cycle(5)).value == 3);

  for (const Graph& g : corpus::all_connected_graphs(5)) {
    InvariantResult alpha = independence_number(g);
    CHECK(alpha.value == oracles::max_independent_set(g));
    CHECK(alpha.witness.count() == alpha.value);
    for (int u : alpha.witness)
      for (int v = alpha.witness.next(u); v >= 0; v = alpha.witness.next(v))
        CHECK(!g.adjacent(u, v));
    InvariantResult omega = clique_number(g);
    CHECK(omega.value == oracles::max_clique(g));
    CHECK(omega.witness.count() == omega.value);
    for (int u : omega.witness)
      for (int v = omega.witness.next(u); v >= 0; v = omega.witness.next(v))
        CHECK(g.adjacent(u, v));
    InvariantResult chi = chromatic_number(g);
    CHECK(chi.value == oracles::min_colors(g));
    // the coloring itself must be proper and use exactly the claimed count
    int used = 0;
    for (int c : chi.coloring) used = std::max(used, c + 1);
    CHECK(used == chi.value);
    for (const auto& [u, v] : g.edges()) CHECK(chi.coloring[u] != chi.coloring[v]);
  }
}

TEST_CASE("every order-n graph has a log-sized homogeneous set") {
  auto t_of = [](int n) {
    long long t = 0, power = 1;
    while (power < n) {
      power *= 4;
      ++t;
    }
    return t;
  };
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : corpus::all_graphs(n))
      CHECK(std::max(independence_number(g).value, clique_number(g).value) >= t_of(n));
  corpus::Rng rng(9);
  for (int i = 0; i < 30; ++i) {
    Graph g = corpus::random_graph(rng, 12, 0.5);
    CHECK(std::max(independence_number(g).value, clique_number(g).value) >= t_of(12));
  }
}

TEST_CASE("invariant chain on small connected graphs") {
  for (int n = 2; n <= 6; ++n)
    for (const Graph& g : corpus::all_connected_graphs(n)) {
      int det = determining_number(g).value;
      int dim = metric_dimension(g).value;
      int lam = location_domination_number(g).value;
      CHECK(det <= dim);
      CHECK(dim <= lam);
    }
}

TEST_CASE("time budget raises Timeout") {
  try {
    SolverOptions opt;
    opt.time_budget = std::chrono::milliseconds(0);
    location_domination_number(gen_path(24), opt);
    FAIL("expected Timeout");
  } catch (const Error& e) {
    CHECK(e.kind() == Err::kTimeout);
  }
}
