#pragma once

// Shared test corpus and independent oracles.  Expected values in the test
// suites are either pinned constants (computed by hand or by the brute-force
// oracles below) or re-derived on the fly by deliberately naive code paths
// that share nothing with the library implementation.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "ccmotion/autgroup.hpp"
#include "ccmotion/config.hpp"
#include "ccmotion/families.hpp"
#include "ccmotion/graph.hpp"
#include "ccmotion/rational.hpp"
#include "ccmotion/tensor.hpp"
#include "ccmotion/wl.hpp"

namespace cctest {

using cc::BigInt;
using cc::color_t;
using cc::Configuration;
using cc::Rational;
using cc::SimpleGraph;

struct Named {
  std::string name;
  Configuration cfg;
};

// ---- special builders -------------------------------------------------------

// The halved 5-cube: vertices F_2^4, adjacent iff the difference has weight
// 1 or 2.  Strongly regular (16, 10, 6, 6) with smallest eigenvalue -2,
// outside the triangular/lattice families (Seidel's sporadic list).
inline SimpleGraph halved_five_cube_graph() {
  SimpleGraph g(16);
  for (int x = 0; x < 16; ++x)
    for (int y = x + 1; y < 16; ++y) {
      int w = __builtin_popcount(x ^ y);
      if (w == 1 || w == 2) g.add_edge(x, y);
    }
  return g;
}

inline Configuration halved_five_cube() {
  return cc::adjacency_configuration(halved_five_cube_graph());
}

// Orbital configuration of the 4-cycle rotation: rank 4 with one oriented
// color pair and the diagonal-matching color.  The standard walkthrough for
// the oriented branch at desk scale.
inline Configuration c4_rotation_orbital() {
  std::vector<int> rot = {1, 2, 3, 0};
  return cc::orbital_configuration({rot}, 4);
}

// Orbital configuration of AGL(1,5) = <x+1, 2x> acting on the 10 edges of
// K_5: a coherent rank-6 refinement of the T(5) scheme in which the union of
// the adjacency-refining colors is exactly T(5) and every within-star pair
// is distinguished inside its star.  Positive instance for the clique
// distinguishing lemma.
inline Configuration f20_orbital_t5() {
  std::vector<std::pair<int, int>> edges;  // lexicographic, matches T(5) ids
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) edges.push_back({a, b});
  auto edge_id = [&](int a, int b) {
    if (a > b) std::swap(a, b);
    for (std::size_t e = 0; e < edges.size(); ++e)
      if (edges[e] == std::pair<int, int>{a, b}) return static_cast<int>(e);
    return -1;
  };
  auto lift = [&](auto point_map) {
    std::vector<int> sigma(edges.size());
    for (std::size_t e = 0; e < edges.size(); ++e)
      sigma[e] = edge_id(point_map(edges[e].first), point_map(edges[e].second));
    return sigma;
  };
  std::vector<int> shift = lift([](int x) { return (x + 1) % 5; });
  std::vector<int> doubling = lift([](int x) { return (2 * x) % 5; });
  return cc::orbital_configuration({shift, doubling}, 10);
}

// The adjacency colors of f20_orbital_t5: the pairing-closed color set whose
// union graph is T(5).
inline std::vector<color_t> f20_t5_adjacency_colors(const Configuration& cfg) {
  SimpleGraph t5 = cc::triangular_graph(5);
  std::vector<bool> seen(cfg.rank(), false);
  std::vector<color_t> out;
  for (int u = 0; u < 10; ++u)
    for (int v = 0; v < 10; ++v)
      if (u != v && t5.adjacent(u, v) && !seen[cfg.color(u, v)]) {
        seen[cfg.color(u, v)] = true;
        out.push_back(cfg.color(u, v));
      }
  std::sort(out.begin(), out.end());
  return out;
}

// ---- corpus -------------------------------------------------------------------

// The axiom corpus of acceptance criterion 1.
inline std::vector<Named> axiom_corpus() {
  std::vector<Named> out;
  for (int d = 2; d <= 3; ++d)
    for (int m = 2 * d; m <= 9; ++m)
      out.push_back({"johnson(" + std::to_string(m) + "," + std::to_string(d) +
                         ")",
                     cc::gen_johnson(m, d)});
  for (int len = 2; len <= 3; ++len)
    for (int alpha = 2; alpha <= 4; ++alpha)
      out.push_back({"hamming(" + std::to_string(len) + "," +
                         std::to_string(alpha) + ")",
                     cc::gen_hamming(len, alpha)});
  for (int s = 4; s <= 12; ++s)
    out.push_back({"triangular(" + std::to_string(s) + ")",
                   cc::gen_triangular(s)});
  for (int s = 2; s <= 12; ++s)
    out.push_back({"lattice(" + std::to_string(s) + ")", cc::gen_lattice(s)});
  out.push_back({"line(petersen)", cc::line_graph_scheme(cc::petersen_graph())});
  out.push_back({"line(k33)",
                 cc::line_graph_scheme(cc::complete_bipartite(3, 3))});
  out.push_back({"line(heawood)", cc::line_graph_scheme(cc::heawood_graph())});
  for (int n = 3; n <= 20; ++n)
    out.push_back({"cycle(" + std::to_string(n) + ")",
                   cc::drg_to_scheme(cc::cycle_graph(n)).first});
  return out;
}

// Everything from the axiom corpus with n <= 60, plus the extra desk
// instances exercised by the branch tests.  Used for the soundness master
// check and certificate replay.
inline std::vector<Named> sound_corpus() {
  std::vector<Named> out;
  for (Named& inst : axiom_corpus())
    if (inst.cfg.n() <= 60) out.push_back(std::move(inst));
  for (int s = 3; s <= 6; ++s)
    out.push_back({"crown(" + std::to_string(s) + ")", cc::gen_crown(s)});
  out.push_back({"paley(13)", cc::paley_configuration(13)});
  out.push_back({"cyclotomic(13,3)", cc::cyclotomic_configuration(13, 3)});
  out.push_back({"halved-5-cube", halved_five_cube()});
  out.push_back({"c4-rotation-orbital", c4_rotation_orbital()});
  out.push_back({"f20-orbital-t5", f20_orbital_t5()});
  return out;
}

// ---- independent oracles -------------------------------------------------------

// Full S_n scan.  Returns the minimal support over non-identity
// color-preserving permutations (n for a rigid configuration) and the group
// order by direct count.  Only viable for small n.
struct BruteGroup {
  BigInt order = 1;
  std::int64_t motion = 0;  // n when trivial
};

inline BruteGroup brute_group(const Configuration& cfg) {
  const int n = cfg.n();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  BruteGroup res;
  res.motion = n;
  long count = 0;
  do {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = 0; v < n; ++v)
        if (cfg.color(p[u], p[v]) != cfg.color(u, v)) {
          ok = false;
          break;
        }
    if (!ok) continue;
    ++count;
    int support = 0;
    for (int v = 0; v < n; ++v) support += p[v] != v;
    if (support > 0) res.motion = std::min<std::int64_t>(res.motion, support);
  } while (std::next_permutation(p.begin(), p.end()));
  res.order = count;
  return res;
}

// Dense adjacency eigenvalues of the union graph over a symmetric color set,
// via an off-the-shelf solver; advisory precision.
inline std::vector<double> dense_union_eigenvalues(
    const Configuration& cfg, const std::vector<color_t>& colors) {
  const int n = cfg.n();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      for (color_t c : colors)
        if (u != v && cfg.color(u, v) == c) a(u, v) = 1.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
  std::vector<double> out(solver.eigenvalues().data(),
                          solver.eigenvalues().data() + n);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// Naive per-pair distinguishing count, independent of the tensor formula.
inline std::int64_t naive_pair_distinguishing(const Configuration& cfg, int u,
                                              int v) {
  std::int64_t d = 0;
  for (int x = 0; x < cfg.n(); ++x)
    if (cfg.color(x, u) != cfg.color(x, v)) ++d;
  return d;
}

inline std::int64_t naive_dmin(const Configuration& cfg) {
  std::int64_t best = cfg.n() + 1;
  for (int u = 0; u < cfg.n(); ++u)
    for (int v = u + 1; v < cfg.n(); ++v)
      best = std::min(best, naive_pair_distinguishing(cfg, u, v));
  return best;
}

}  // namespace cctest
