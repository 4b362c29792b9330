#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "ccmotion/families.hpp"
#include "ccmotion/geometry.hpp"
#include "ccmotion/graph.hpp"
#include "ccmotion/tensor.hpp"

#include "helpers.hpp"

using namespace cc;

namespace {

std::vector<std::int64_t> sorted_degrees(const Configuration& cfg) {
  IntersectionTensor t = intersection_tensor(cfg);
  std::vector<std::int64_t> ks;
  for (color_t c : t.edge_colors()) ks.push_back(t.degree(c));
  std::sort(ks.begin(), ks.end());
  return ks;
}

}  // namespace

TEST_CASE("johnson generator shape and guards") {
  Configuration j = gen_johnson(5, 2);
  CHECK(j.n() == 10);
  CHECK(j.rank() == 3);
  CHECK(sorted_degrees(j) == std::vector<std::int64_t>{3, 6});
  CHECK(gen_johnson(7, 3).n() == 35);
  CHECK(gen_johnson(7, 3).rank() == 4);
  CHECK_THROWS_AS(gen_johnson(3, 2), Error);
  CHECK_THROWS_AS(gen_johnson(5, 0), Error);
}

TEST_CASE("hamming generator shape and guards") {
  Configuration h = gen_hamming(2, 3);
  CHECK(h.n() == 9);
  CHECK(h.rank() == 3);
  CHECK(sorted_degrees(h) == std::vector<std::int64_t>{4, 4});
  CHECK(gen_hamming(3, 2).n() == 8);
  CHECK(gen_hamming(3, 2).rank() == 4);
  CHECK(sorted_degrees(gen_hamming(3, 2)) ==
        std::vector<std::int64_t>{1, 3, 3});
  CHECK_THROWS_AS(gen_hamming(0, 3), Error);
  CHECK_THROWS_AS(gen_hamming(2, 1), Error);
}

TEST_CASE("triangular and lattice schemes carry the textbook parameters") {
  for (int s = 4; s <= 9; ++s) {
    CAPTURE(s);
    IntersectionTensor t = intersection_tensor(gen_triangular(s));
    auto srg = srg_of_union(t, {1});
    REQUIRE(srg.has_value());
    CHECK(srg->n == s * (s - 1) / 2);
    CHECK(srg->k == 2 * (s - 2));
    CHECK(srg->lambda == s - 2);
    CHECK(srg->mu == 4);
  }
  for (int s = 2; s <= 9; ++s) {
    CAPTURE(s);
    IntersectionTensor t = intersection_tensor(gen_lattice(s));
    auto srg = srg_of_union(t, {1});
    REQUIRE(srg.has_value());
    CHECK(srg->n == s * s);
    CHECK(srg->k == 2 * (s - 1));
    CHECK(srg->lambda == s - 2);
    CHECK(srg->mu == 2);
  }
  CHECK_THROWS_AS(gen_triangular(3), Error);
  CHECK_THROWS_AS(gen_lattice(1), Error);
  // The graph builders agree with the schemes' adjacency color.
  CHECK(color_graph(gen_triangular(5), {1}) == triangular_graph(5));
  CHECK(color_graph(gen_lattice(4), {1}) == lattice_graph(4));
}

TEST_CASE("crown scheme is the distance scheme of the crown graph") {
  Configuration c = gen_crown(4);
  CHECK(c.n() == 8);
  CHECK(c.rank() == 4);
  CHECK(sorted_degrees(c) == std::vector<std::int64_t>{1, 3, 3});
  // crown(3) is the 6-cycle.
  SimpleGraph g = color_graph(gen_crown(3), {1});
  CHECK(g.n() == 6);
  int k = 0;
  CHECK(is_regular(g, &k));
  CHECK(k == 2);
  CHECK(is_connected(g));
  CHECK_THROWS_AS(gen_crown(2), Error);
}

TEST_CASE("paley configurations") {
  Configuration p13 = paley_configuration(13);
  CHECK(p13.rank() == 3);
  CHECK(p13.all_symmetric());
  auto srg = srg_of_union(intersection_tensor(p13), {1});
  REQUIRE(srg.has_value());
  CHECK(srg->n == 13);
  CHECK(srg->k == 6);
  CHECK(srg->lambda == 2);
  CHECK(srg->mu == 3);

  Configuration p11 = paley_configuration(11);
  CHECK(p11.rank() == 3);
  CHECK_FALSE(p11.all_symmetric());

  CHECK_THROWS_AS(paley_configuration(9), Error);   // prime power, not prime
  CHECK_THROWS_AS(paley_configuration(2), Error);
}

TEST_CASE("cyclotomic configurations") {
  Configuration c = cyclotomic_configuration(13, 3);
  CHECK(c.rank() == 4);
  CHECK(c.all_symmetric());
  CHECK(sorted_degrees(c) == std::vector<std::int64_t>{4, 4, 4});
  CHECK(cyclotomic_configuration(13, 4).rank() == 5);
  // e = 3 over F_7 groups differences into {1,6}, {3,4}, {2,5}: the distance
  // classes of the 7-cycle with distances 2 and 3 swapped.
  CHECK(cyclotomic_configuration(7, 3) ==
        drg_to_scheme(cycle_graph(7)).first.permuted_colors({0, 1, 3, 2}));
  CHECK_THROWS_AS(cyclotomic_configuration(13, 5), Error);  // 5 does not divide 12
  CHECK_THROWS_AS(cyclotomic_configuration(12, 3), Error);  // not prime
}

TEST_CASE("distance-regular recognition on the Petersen graph") {
  auto [cfg, arr] = drg_to_scheme(petersen_graph());
  CHECK(cfg.rank() == 3);
  CHECK(arr.diameter == 2);
  CHECK(arr.b == std::vector<std::int64_t>{3, 2});
  CHECK(arr.c == std::vector<std::int64_t>{1, 1});
  CHECK(arr.a == std::vector<std::int64_t>{0, 0, 2});
}

TEST_CASE("distance-regular recognition on the 6-cycle") {
  auto [cfg, arr] = drg_to_scheme(cycle_graph(6));
  CHECK(cfg.rank() == 4);
  CHECK(arr.diameter == 3);
  CHECK(arr.b == std::vector<std::int64_t>{2, 1, 1});
  CHECK(arr.c == std::vector<std::int64_t>{1, 1, 2});
}

TEST_CASE("drg_to_scheme rejects non-distance-regular graphs") {
  SimpleGraph star(4);
  star.add_edge(0, 1);
  star.add_edge(0, 2);
  star.add_edge(0, 3);
  try {
    drg_to_scheme(star);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code == Errc::not_regular);
  }

  // Regular and connected but not distance-regular: the prism K_3 x K_2.
  SimpleGraph prism(6);
  for (int i : {0, 1, 2}) prism.add_edge(i, (i + 1) % 3);
  for (int i : {0, 1, 2}) prism.add_edge(3 + i, 3 + (i + 1) % 3);
  for (int i : {0, 1, 2}) prism.add_edge(i, 3 + i);
  try {
    drg_to_scheme(prism);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code == Errc::not_distance_regular);
  }

  SimpleGraph two(4);
  two.add_edge(0, 1);
  two.add_edge(2, 3);
  try {
    drg_to_scheme(two);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code == Errc::not_distance_regular);
  }
}

TEST_CASE("line graph schemes") {
  // L(K_{3,3}) is the 3x3 rook graph; the refinement stays rank 3 and the
  // parameters are Hamming H(2,3).
  Configuration rook = line_graph_scheme(complete_bipartite(3, 3));
  CHECK(rook.n() == 9);
  CHECK(rook.rank() == 3);
  auto mh = recognize_hamming(intersection_tensor(rook));
  REQUIRE(mh.has_value());
  CHECK(mh->d == 2);
  CHECK(mh->m == 3);

  // L(Petersen) has distance classes of degrees 4, 8, 2 and nothing finer.
  Configuration lp = line_graph_scheme(petersen_graph());
  CHECK(lp.n() == 15);
  CHECK(lp.rank() == 4);
  CHECK(sorted_degrees(lp) == std::vector<std::int64_t>{2, 4, 8});
  CHECK_FALSE(coherence_witness(lp).has_value());
}

TEST_CASE("minimal degree formulas") {
  CHECK(cameron_min_degree(5, 2, 1, CameronElement::transposition) ==
        BigInt(6));
  CHECK(cameron_min_degree(7, 2, 1, CameronElement::transposition) ==
        BigInt(10));
  CHECK(cameron_min_degree(9, 3, 1, CameronElement::transposition) ==
        BigInt(42));
  CHECK(cameron_min_degree(5, 2, 1, CameronElement::three_cycle) == BigInt(9));
  CHECK(cameron_min_degree(6, 3, 1, CameronElement::three_cycle) ==
        BigInt(18));
  // Product action: one moving coordinate, the rest free.
  CHECK(cameron_min_degree(5, 2, 2, CameronElement::transposition) ==
        BigInt(60));
  CHECK_THROWS_AS(cameron_min_degree(5, 0, 1, CameronElement::transposition),
                  Error);

  CHECK(hamming_motion_upper(2, 3) == BigInt(6));
  CHECK(hamming_motion_upper(3, 2) == BigInt(8));
  CHECK(hamming_motion_upper(1, 5) == BigInt(2));
  CHECK_THROWS_AS(hamming_motion_upper(0, 3), Error);
}

TEST_CASE("johnson parameter recognition") {
  for (auto [m, d] : {std::pair{5, 2}, {7, 2}, {6, 3}, {9, 3}, {4, 2}}) {
    CAPTURE(m);
    CAPTURE(d);
    auto match = recognize_johnson(intersection_tensor(gen_johnson(m, d)));
    REQUIRE(match.has_value());
    CHECK(match->m == m);
    CHECK(match->d == d);
  }
  // T(5) carries the J(5,2) intersection numbers.
  auto match = recognize_johnson(intersection_tensor(gen_triangular(5)));
  REQUIRE(match.has_value());
  CHECK(match->m == 5);
  CHECK(match->d == 2);

  CHECK_FALSE(
      recognize_johnson(intersection_tensor(paley_configuration(13))));
  CHECK_FALSE(
      recognize_johnson(intersection_tensor(cctest::halved_five_cube())));
  CHECK_FALSE(recognize_johnson(intersection_tensor(gen_hamming(3, 3))));
}

TEST_CASE("hamming parameter recognition") {
  for (auto [len, alpha] : {std::pair{2, 3}, {2, 4}, {3, 2}, {3, 3}}) {
    CAPTURE(len);
    CAPTURE(alpha);
    auto match =
        recognize_hamming(intersection_tensor(gen_hamming(len, alpha)));
    REQUIRE(match.has_value());
    CHECK(match->d == len);
    CHECK(match->m == alpha);
  }
  // L2(s) carries the H(2,s) intersection numbers.
  auto match = recognize_hamming(intersection_tensor(gen_lattice(4)));
  REQUIRE(match.has_value());
  CHECK(match->d == 2);
  CHECK(match->m == 4);

  CHECK_FALSE(
      recognize_hamming(intersection_tensor(gen_johnson(6, 3))));
  CHECK_FALSE(
      recognize_hamming(intersection_tensor(paley_configuration(13))));
}
