#pragma once

#include <vector>

#include "ccmotion/config.hpp"

namespace cc {

// One refinement round: pairs are regrouped by
// (current color, multiset over w of (c(u,w), c(w,v))).
// New ids depend only on the isomorphism class of the coloring.
Configuration wl_round(const Configuration& cfg);

struct RefinementTrace {
  Configuration stable;
  std::vector<int> rank_history;  // input rank, then rank after each round
  int rounds = 0;                 // rounds that split at least one cell
};

// Iterate wl_round until the rank stops growing.  A round that splits no
// cell leaves the partition unchanged, so the result is a fixed point and
// the returned coloring is coherent.  When the input is already stable the
// input object is returned untouched (rounds == 0).
RefinementTrace wl_stabilize(const Configuration& cfg, int max_rounds = 1000);

// Give (v,v) a fresh color for each listed vertex, then compact color ids
// order-preservingly.
Configuration individualize(const Configuration& cfg,
                            const std::vector<int>& vertices);

// True when individualizing the listed vertices and refining to the fixed
// point yields the discrete coloring (every pair its own color).
bool splits_completely(const Configuration& cfg,
                       const std::vector<int>& vertices);

// Greedy cover: repeatedly add the vertex distinguishing the most
// still-indistinguished vertex pairs (ties -> lowest id) until every pair
// u != v has some chosen z with c(z,u) != c(z,v).  z in {u,v} counts.
std::vector<int> greedy_distinguishing_set(const Configuration& cfg);

}  // namespace cc
