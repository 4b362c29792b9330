#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "ccmotion/distinguish.hpp"
#include "ccmotion/families.hpp"
#include "ccmotion/graph.hpp"
#include "ccmotion/tensor.hpp"
#include "ccmotion/wl.hpp"

#include "helpers.hpp"

using namespace cc;

namespace {

SimpleGraph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  SimpleGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

// Same partition of V x V, ignoring color names.
bool same_partition(const Configuration& a, const Configuration& b) {
  if (a.n() != b.n() || a.rank() != b.rank()) return false;
  std::vector<int> fwd(a.rank(), -1), bwd(b.rank(), -1);
  for (int u = 0; u < a.n(); ++u)
    for (int v = 0; v < a.n(); ++v) {
      color_t ca = a.color(u, v), cb = b.color(u, v);
      if (fwd[ca] == -1) fwd[ca] = static_cast<int>(cb);
      if (bwd[cb] == -1) bwd[cb] = static_cast<int>(ca);
      if (fwd[ca] != static_cast<int>(cb) || bwd[cb] != static_cast<int>(ca))
        return false;
    }
  return true;
}

}  // namespace

TEST_CASE("coherent input is already a fixed point") {
  for (const auto& inst : {cctest::Named{"j62", gen_johnson(6, 2)},
                           cctest::Named{"petersen",
                                         adjacency_configuration(
                                             petersen_graph())},
                           cctest::Named{"f20", cctest::f20_orbital_t5()}}) {
    CAPTURE(inst.name);
    RefinementTrace tr = wl_stabilize(inst.cfg);
    CHECK(tr.rounds == 0);
    CHECK(tr.stable == inst.cfg);
    // One probe round that splits nothing: the history is {r, r}.
    CHECK(tr.rank_history ==
          std::vector<int>{inst.cfg.rank(), inst.cfg.rank()});
  }
}

TEST_CASE("heawood adjacency refines to the distance scheme") {
  Configuration adj = adjacency_configuration(heawood_graph());
  CHECK(coherence_witness(adj).has_value());
  RefinementTrace tr = wl_stabilize(adj);
  CHECK(tr.rounds >= 1);
  CHECK(tr.stable.rank() == 4);
  CHECK_FALSE(coherence_witness(tr.stable).has_value());
  CHECK(same_partition(tr.stable, drg_to_scheme(heawood_graph()).first));
}

TEST_CASE("biregular graph splits its diagonal") {
  Configuration adj = adjacency_configuration(complete_bipartite(2, 3));
  RefinementTrace tr = wl_stabilize(adj);
  CHECK(tr.stable.diagonal_rank() == 2);
  CHECK(tr.stable.rank() == 6);
  CHECK_FALSE(coherence_witness(tr.stable).has_value());
  CHECK_FALSE(tr.stable.homogeneous());
}

TEST_CASE("refinement commutes with vertex relabeling") {
  std::mt19937_64 rng(20260815);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 6 + static_cast<int>(rng() % 27);  // up to 32
    Configuration cfg = adjacency_configuration(random_graph(n, 0.4, rng));
    std::vector<int> sigma = cctest::random_permutation(n, rng);
    Configuration moved = cfg.permuted_vertices(sigma);
    CHECK(wl_round(moved) == wl_round(cfg).permuted_vertices(sigma));
    CHECK(wl_stabilize(moved).stable ==
          wl_stabilize(cfg).stable.permuted_vertices(sigma));
  }
}

TEST_CASE("stable points of refinement are coherent") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 5 + static_cast<int>(rng() % 20);
    Configuration cfg = adjacency_configuration(random_graph(n, 0.35, rng));
    RefinementTrace tr = wl_stabilize(cfg);
    CHECK_FALSE(coherence_witness(tr.stable).has_value());
    CHECK(wl_stabilize(tr.stable).rounds == 0);
    // Ranks strictly increase until the final probe repeats the fixed point.
    std::size_t len = tr.rank_history.size();
    REQUIRE(len >= 2);
    CHECK(tr.rank_history[len - 1] == tr.rank_history[len - 2]);
    for (std::size_t i = 1; i + 1 < len; ++i)
      CHECK(tr.rank_history[i] > tr.rank_history[i - 1]);
  }
}

TEST_CASE("individualize gives the listed vertices fresh diagonal colors") {
  Configuration pet = drg_to_scheme(petersen_graph()).first;
  Configuration one = individualize(pet, {3});
  CHECK(one.rank() == pet.rank() + 1);
  CHECK(one.vertex_color(3) != one.vertex_color(0));
  for (int v = 0; v < one.n(); ++v)
    if (v != 3) CHECK(one.vertex_color(v) == one.vertex_color(0));
  // Idempotent on the same vertex set size: two vertices, two fresh colors.
  Configuration two = individualize(pet, {3, 7});
  CHECK(two.rank() == pet.rank() + 2);
  CHECK(two.vertex_color(3) != two.vertex_color(7));
  CHECK_THROWS_AS(individualize(pet, {-1}), Error);
  CHECK_THROWS_AS(individualize(pet, {10}), Error);
  CHECK_THROWS_AS(individualize(pet, {3, 3}), Error);
}

TEST_CASE("splitting sets of the Petersen scheme") {
  Configuration pet = drg_to_scheme(petersen_graph()).first;
  // One vertex leaves a nontrivial stabilizer, so refinement cannot go
  // discrete.
  CHECK_FALSE(splits_completely(pet, {0}));
  std::vector<int> greedy = greedy_distinguishing_set(pet);
  CHECK(splits_completely(pet, greedy));
}

TEST_CASE("greedy distinguishing sets cover every pair within the bound") {
  for (const auto& inst :
       {cctest::Named{"petersen", drg_to_scheme(petersen_graph()).first},
        cctest::Named{"j62", gen_johnson(6, 2)},
        cctest::Named{"cyc", cyclotomic_configuration(13, 3)},
        cctest::Named{"f20", cctest::f20_orbital_t5()},
        cctest::Named{"crown4", gen_crown(4)}}) {
    CAPTURE(inst.name);
    const Configuration& cfg = inst.cfg;
    std::vector<int> set = greedy_distinguishing_set(cfg);
    // Every pair u != v has a chosen z with c(z,u) != c(z,v).
    for (int u = 0; u < cfg.n(); ++u)
      for (int v = u + 1; v < cfg.n(); ++v) {
        bool split = false;
        for (int z : set)
          if (cfg.color(z, u) != cfg.color(z, v)) {
            split = true;
            break;
          }
        CHECK(split);
      }
    // Coupon-collector bound via the minimum distinguishing number.
    IntersectionTensor t = intersection_tensor(cfg);
    std::int64_t dmin = distinguishing_report(cfg, t).dmin;
    REQUIRE(dmin > 0);
    double bound =
        2.0 * cfg.n() * std::log(static_cast<double>(cfg.n())) / dmin + 1.0;
    CHECK(static_cast<double>(set.size()) <= bound);
  }
}
