#include "ccmotion/distinguish.hpp"

#include <cmath>

#include "ccmotion/error.hpp"

namespace cc {

std::int64_t pair_distinguishing(const Configuration& cfg, int u, int v) {
  if (u == v) throw Error(Errc::same_vertex, "pair_distinguishing needs u != v");
  std::int64_t d = 0;
  for (int x = 0; x < cfg.n(); ++x)
    if (cfg.color(x, u) != cfg.color(x, v)) ++d;
  return d;
}

DistinguishReport distinguishing_report(const Configuration& cfg,
                                        const IntersectionTensor& t) {
  const int r = t.rank();
  const std::int64_t n = cfg.n();
  DistinguishReport rep;
  rep.d_color.assign(r, 0);

  // x fails to distinguish (u,v) with c(u,v)=i iff c(x,u) = c(x,v) = j for
  // some j; the number of such x is sum_j p(j*, j, i).
  for (color_t i : t.edge_colors()) {
    std::int64_t same = 0;
    for (int j = 0; j < r; ++j) same += t.p(t.paired(j), j, i);
    rep.d_color[i] = n - same;
  }

  if (n <= 512) {
    // Audit the tensor formula against direct counts, one pair per color.
    std::vector<char> seen(r, 0);
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        if (u == v) continue;
        color_t i = cfg.color(u, v);
        if (seen[i]) continue;
        seen[i] = 1;
        if (pair_distinguishing(cfg, u, v) != rep.d_color[i])
          throw Error(Errc::soundness_failure,
                      "distinguishing formula disagrees with direct count");
      }
  }

  bool first = true;
  for (color_t i : t.edge_colors()) {
    if (first || rep.d_color[i] < rep.dmin) {
      rep.dmin = rep.d_color[i];
      rep.argmin = i;
      first = false;
    }
  }
  rep.dist = color_distance_table(t);
  return rep;
}

Rational bounded_degree_bound(const IntersectionTensor& t,
                              const Rational& delta) {
  const int r = t.rank();
  if (r < 3) throw Error(Errc::bad_params, "rank must be at least 3");
  if (delta <= 0 || delta >= 1)
    throw Error(Errc::bad_params, "delta must lie in (0,1)");
  const std::int64_t n = t.n();
  for (color_t i : t.edge_colors()) {
    // Hypothesis: every constituent degree is at most delta * n.
    if (Rational(t.degree(i)) > delta * n)
      throw Error(Errc::degree_too_large,
                  "constituent degree > delta * n; bound does not apply");
  }
  Rational m = delta <= Rational(1, 2) ? delta : Rational(1) - delta;
  return m / (6 * (r - 1)) * n;
}

double wielandt_thickness_bound(double alpha, std::int64_t n) {
  if (!(alpha > 0.0) || alpha > 1.0)
    throw Error(Errc::bad_alpha, "alpha must lie in (0,1]");
  if (n < 2) throw Error(Errc::bad_params, "n must be at least 2");
  return 3.0 / alpha * std::log(static_cast<double>(n));
}

}  // namespace cc
