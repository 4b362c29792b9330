#pragma once

#include <cstdint>
#include <vector>

#include "ccmotion/config.hpp"
#include "ccmotion/rational.hpp"

namespace cc {

struct GroupInfo {
  // Color-preserving vertex permutations generating Aut(cfg); the identity is
  // never listed.
  std::vector<std::vector<int>> generators;
  BigInt order;
  // Minimal support over non-identity elements; n for the trivial group.
  std::int64_t motion = 0;
  int orbit_count = 0;
  // True when motion came from full enumeration (or the group is trivial, or
  // the fallback estimate met the distinguishing-number floor).
  bool exact = false;
};

// Exact automorphism group by individualization-refinement backtracking over
// the WL-stable pair coloring.  Order via orbit-stabilizer along the base.
// Motion by enumerating every element while order <= enum_cap; above the cap
// the support search degrades to generator words and conjugates and `exact`
// drops to false unless the estimate meets the distinguishing floor.
// Throws Error(cap_exceeded) when n > vertex_cap.
GroupInfo automorphisms(const Configuration& cfg, int vertex_cap = 60,
                        double enum_cap = 1e6);

// automorphisms(...).motion, but throws Error(cap_exceeded) instead of
// returning an inexact value.
std::int64_t exact_motion(const Configuration& cfg, double enum_cap = 1e6,
                          int vertex_cap = 60);

// Colors = orbits of the pair action of <generators>.  Coherent by
// construction (asserted).  With require_transitive, demands a single vertex
// orbit and throws Error(not_transitive) otherwise; the trivial group on
// n > 1 vertices is a legitimate input yielding the discrete configuration.
Configuration orbital_configuration(
    const std::vector<std::vector<int>>& generators, int n,
    bool require_transitive = false);

}  // namespace cc
