#pragma once

#include <cstdint>
#include <vector>

#include "ccmotion/config.hpp"
#include "ccmotion/rational.hpp"
#include "ccmotion/tensor.hpp"

namespace cc {

// Number of x with c(x,u) != c(x,v); u and v themselves always count.
std::int64_t pair_distinguishing(const Configuration& cfg, int u, int v);

struct DistinguishReport {
  // D(i) per color; diagonal colors hold 0 and are excluded from dmin.
  std::vector<std::int64_t> d_color;
  std::int64_t dmin = 0;
  color_t argmin = 0;
  std::vector<std::vector<int>> dist;  // color_distance_table
};

// Homogeneous coherent input: D(u,v) depends only on c(u,v) and equals
// n - sum_j p(j*, j, i).  Audited against per-pair counts when n <= 512.
DistinguishReport distinguishing_report(const Configuration& cfg,
                                        const IntersectionTensor& t);

// Motion floor for primitive configurations whose degrees all stay below
// delta * n: min(delta, 1-delta) / (6 (r-1)) * n.
Rational bounded_degree_bound(const IntersectionTensor& t,
                              const Rational& delta);

// Upper bound (3/alpha) ln n on the thickness of a group of minimal degree
// >= alpha n.
double wielandt_thickness_bound(double alpha, std::int64_t n);

}  // namespace cc
