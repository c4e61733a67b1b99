#include <doctest.h>

#include "locdom/automorphism.hpp"
#include "locdom/errors.hpp"
#include "locdom/families.hpp"
#include "locdom/invariants.hpp"
#include "locdom/trees.hpp"
#include "locdom/twins.hpp"

using namespace locdom;

TEST_CASE("orders") {
  for (int r = 6; r <= 9; ++r) {
    CHECK(gen_tr(r).order() == r + 1);
    CHECK(gen_gr(r).order() == 2 * r + 2);
    CHECK(gen_hr(r).order() == 2 * r + 3);
  }
  for (int rim = 3; rim <= 8; ++rim) CHECK(gen_wheel(rim).order() == rim + 1);
  for (int q = 7; q <= 8; ++q)
    for (int s = 0; s < 7; ++s) CHECK(gen_tqs(q, s).order() == 7 * q + s);
}

TEST_CASE("structure") {
  Graph t6 = gen_tr(6);
  CHECK(is_tree(t6));
  CHECK(t6.adjacent(0, 3));
  CHECK(t6.degree(0) == 1);

  Graph g6 = gen_gr(6);
  CHECK(is_tree(g6));
  CHECK(is_twin_free(g6));
  CHECK(is_connected(g6));
  CHECK(!common_neighbor_excess(g6, 2));

  Graph h6 = gen_hr(6);
  CHECK(is_tree(h6));
  CHECK(!is_twin_free(h6));  // the two pendants at u0
  CHECK(h6.adjacent(0, 14));
  CHECK(h6.label(14) == "v0'");

  for (int s = 0; s < 7; ++s) {
    Graph t = gen_tqs(7, s);
    CHECK(is_tree(t));
    CHECK(is_twin_free(t));
    CHECK(!common_neighbor_excess(t, 2));
  }

  Graph w = gen_wheel(5);
  CHECK(w.degree(0) == 5);
  CHECK(is_connected(w));
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(gen_tr(5), Error);
  CHECK_THROWS_AS(gen_gr(4), Error);
  CHECK_THROWS_AS(gen_tqs(6, 0), Error);
  CHECK_THROWS_AS(gen_tqs(7, 7), Error);
  CHECK_THROWS_AS(gen_cycle(2), Error);
  CHECK_THROWS_AS(gen_wheel(2), Error);
  CHECK_THROWS_AS(dim_det_gap_witness(13), Error);
  CHECK_THROWS_AS(gen(FamilySpec{Family::kPath, {}}), Error);      // missing param
  CHECK_THROWS_AS(gen(FamilySpec{Family::kTqs, {7}}), Error);      // missing s
  CHECK_THROWS_AS(family_from_string("nonsense"), Error);
}

TEST_CASE("name parsing") {
  CHECK(family_from_string("G_r") == Family::kGr);
  CHECK(family_from_string("gr") == Family::kGr);
  CHECK(family_from_string("T_qs") == Family::kTqs);
  CHECK(family_from_string("WHEEL") == Family::kWheel);
  CHECK(gen(FamilySpec{Family::kStar, {4}}).order() == 5);
}

TEST_CASE("gap witness orders and parity") {
  for (int n = 14; n <= 17; ++n) {
    Graph w = dim_det_gap_witness(n);
    CHECK(w.order() == n);
    // the uncomplemented member is the corona tree (plus pendant when odd)
    Graph family = complement(w);
    CHECK(is_tree(family));
  }
}

TEST_CASE("wheel difference identity, exact solvers, rims 8..14") {
  for (int rim = 8; rim <= 14; ++rim) {
    Graph w = gen_wheel(rim);
    int dim = metric_dimension(w).value;
    int det = determining_number(w).value;
    int order = rim + 1;
    CHECK(dim - det == 2 * order / 5 - 2);
  }
}
