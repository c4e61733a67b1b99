#include <doctest.h>

#include "locdom/corpus.hpp"
#include "locdom/errors.hpp"
#include "locdom/families.hpp"
#include "locdom/graph.hpp"
#include "locdom/graph_io.hpp"
#include "oracles.hpp"

using namespace locdom;

TEST_CASE("build_graph basics") {
  Graph p4 = build_graph(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(p4.order() == 4);
  CHECK(p4.edge_count() == 3);
  CHECK(p4.adjacent(0, 1));
  CHECK(p4.adjacent(1, 0));
  CHECK(!p4.adjacent(0, 2));

  Graph k1 = build_graph(1, {});
  CHECK(k1.order() == 1);
  CHECK(k1.edge_count() == 0);

  // duplicates collapse, including reversed ones
  Graph dup = build_graph(4, {{0, 1}, {1, 0}});
  CHECK(dup.edge_count() == 1);

  CHECK_THROWS_AS(build_graph(3, {{0, 3}}), Error);
  CHECK_THROWS_AS(build_graph(3, {{1, 1}}), Error);
  try {
    build_graph(3, {{0, 3}});
  } catch (const Error& e) {
    CHECK(e.kind() == Err::kInvalidEdge);
  }
}

TEST_CASE("complement") {
  Graph k4 = gen_complete(4);
  CHECK(complement(k4).edge_count() == 0);
  Graph p4 = gen_path(4);
  Graph back = complement(complement(p4));
  CHECK(back.edges() == p4.edges());

  for (const Graph& g : corpus::all_graphs(5)) {
    Graph twice = complement(complement(g));
    CHECK(twice.edges() == g.edges());
  }
}

TEST_CASE("corona") {
  Graph k2 = corona_k1(build_graph(1, {}));
  CHECK(k2.order() == 2);
  CHECK(k2.adjacent(0, 1));

  Graph g6 = corona_k1(gen_tr(6));
  CHECK(g6.order() == 14);
  CHECK(g6.label(7) == "v0");
  CHECK(g6.label(0) == "u0");

  // corona of P2 is a 4-vertex path
  Graph c = corona_k1(gen_path(2));
  CHECK(c.order() == 4);
  CHECK(c.edge_count() == 3);
  int max_deg = 0;
  for (int v = 0; v < 4; ++v) max_deg = std::max(max_deg, c.degree(v));
  CHECK(max_deg == 2);
}

TEST_CASE("distances") {
  Graph p4 = gen_path(4);
  DistanceMatrix d = distances(p4);
  CHECK(d.at(0, 3) == 3);
  CHECK(d.at(0, 0) == 0);

  DistanceMatrix dk = distances(gen_complete(4));
  for (int u = 0; u < 4; ++u)
    for (int v = 0; v < 4; ++v)
      CHECK(dk.at(u, v) == (u == v ? 0 : 1));

  // pendant of u0 to pendant of u6 in G_6, through the u0-u3 shortcut
  Graph g6 = gen_gr(6);
  CHECK(distances(g6).at(7, 13) == 6);

  // disconnected pairs get the sentinel
  Graph two = build_graph(2, {});
  CHECK(distances(two).at(0, 1) == DistanceMatrix::kInfinity);
}

TEST_CASE("distances agree with the Floyd-Warshall oracle") {
  auto check_graph = [](const Graph& g) {
    DistanceMatrix d = distances(g);
    auto fw = oracles::floyd_warshall(g);
    for (int u = 0; u < g.order(); ++u)
      for (int v = 0; v < g.order(); ++v) {
        int want = fw[u][v] >= oracles::kUnreached ? DistanceMatrix::kInfinity : fw[u][v];
        CHECK(d.at(u, v) == want);
        CHECK(d.at(u, v) == d.at(v, u));
      }
  };
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : corpus::all_graphs(n)) check_graph(g);
  corpus::Rng rng(11);
  for (int i = 0; i < 60; ++i) check_graph(corpus::random_graph(rng, 10, i % 2 ? 0.5 : 0.2));
}

TEST_CASE("is_connected") {
  CHECK(is_connected(gen_path(4)));
  CHECK(!is_connected(build_graph(2, {})));
  CHECK(is_connected(gen_gr(6)));
  CHECK(is_connected(build_graph(1, {})));
}

TEST_CASE("common neighbor excess") {
  Graph c4 = gen_cycle(4);
  auto pair = common_neighbor_excess(c4, 2);
  REQUIRE(pair.has_value());
  CHECK((c4.neighbors(pair->first) & c4.neighbors(pair->second)).count() >= 2);
  CHECK(!c4.adjacent(pair->first, pair->second));  // the diagonal

  CHECK(!common_neighbor_excess(gen_tr(6), 2));
  corpus::Rng rng(3);
  CHECK(!common_neighbor_excess(corpus::random_tree(rng, 12), 2));

  auto k4pair = common_neighbor_excess(gen_complete(4), 2);
  REQUIRE(k4pair.has_value());
  CHECK((gen_complete(4).neighbors(k4pair->first) & gen_complete(4).neighbors(k4pair->second))
            .count() >= 2);

  CHECK_THROWS_AS(common_neighbor_excess(c4, 0), Error);
}

TEST_CASE("C4 detection matches brute-force cycle enumeration") {
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : corpus::all_graphs(n))
      CHECK(!common_neighbor_excess(g, 2).has_value() == !oracles::has_c4(g));
  corpus::Rng rng(17);
  for (int i = 0; i < 40; ++i) {
    Graph g = corpus::random_graph(rng, 12, 0.25);
    CHECK(!common_neighbor_excess(g, 2).has_value() == !oracles::has_c4(g));
  }
}

TEST_CASE("graph6 decoding of known records") {
  Graph k4 = parse_graph6("C~");
  CHECK(k4.order() == 4);
  CHECK(k4.edge_count() == 6);

  Graph star = parse_graph6("D?{");
  CHECK(star.order() == 5);
  CHECK(star.degree(4) == 4);
  CHECK(emit_graph6(star) == "D?{");
}

TEST_CASE("graph6 round trip is the identity on connected graphs up to order 6") {
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : corpus::all_connected_graphs(n)) {
      std::string text = emit_graph6(g);
      CHECK(emit_graph6(parse_graph6(text)) == text);
    }
}

TEST_CASE("graph6 long form") {
  Graph big(70, {{0, 69}, {1, 2}});
  std::string text = emit_graph6(big);
  CHECK(text[0] == '~');
  Graph back = parse_graph6(text);
  CHECK(back.order() == 70);
  CHECK(back.adjacent(0, 69));
  CHECK(back.edge_count() == 2);
}

TEST_CASE("graph6 parse errors carry byte offsets") {
  auto expect_parse_error = [](const std::string& text) {
    try {
      parse_graph6(text);
      FAIL("expected a parse error for ", text);
    } catch (const Error& e) {
      CHECK(e.kind() == Err::kParse);
      CHECK(std::string(e.what()).find("byte") != std::string::npos);
    }
  };
  expect_parse_error("");       // empty
  expect_parse_error("D?");     // truncated body
  expect_parse_error("B~");     // nonzero padding
  expect_parse_error("C~~~");   // trailing bytes
  expect_parse_error("C\x1f");  // byte below the printable range
}

TEST_CASE("edge list format") {
  Graph p4 = gen_path(4);
  std::string text = emit_edge_list(p4);
  Graph back = parse_edge_list(text);
  CHECK(back.edges() == p4.edges());

  Graph commented = parse_edge_list("# a path\n4\n0 1\n1 2 # middle\n\n2 3\n");
  CHECK(commented.edges() == p4.edges());

  CHECK_THROWS_AS(parse_edge_list("4\n0\n"), Error);
  CHECK_THROWS_AS(parse_edge_list("oops\n"), Error);
  CHECK_THROWS_AS(parse_edge_list("# only comments\n"), Error);
}
