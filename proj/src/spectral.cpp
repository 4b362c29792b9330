#include "ccmotion/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "ccmotion/error.hpp"

namespace cc {
namespace {

Rational xi_slack() { return Rational(1, 1 << 20); }

void require_scheme_rank4(const IntersectionTensor& t) {
  if (t.rank() != 4) throw Error(Errc::wrong_rank, "rank-4 scheme required");
  if (t.diagonal_colors().size() != 1)
    throw Error(Errc::not_homogeneous, "scheme must be homogeneous");
  for (color_t i : t.edge_colors())
    if (t.paired(i) != i)
      throw Error(Errc::bad_params, "association scheme needs symmetric colors");
}

std::vector<BigInt> regular_matrix(const IntersectionTensor& t,
                                   const std::vector<color_t>& set) {
  const int r = t.rank();
  std::vector<BigInt> b(std::size_t(r) * r);
  for (color_t i : set)
    for (int row = 0; row < r; ++row)
      for (int j = 0; j < r; ++j)
        b[std::size_t(row) * r + j] += t.p(i, j, color_t(row));
  return b;
}

Spectrum spectrum_of_set(const IntersectionTensor& t, color_t requested,
                         std::vector<color_t> set, bool symmetrized) {
  Spectrum s;
  s.color = requested;
  s.colors = set;
  s.symmetrized = symmetrized;
  for (color_t i : set) s.k += t.degree(i);

  s.char_poly = charpoly(regular_matrix(t, set), t.rank());
  s.nontrivial_poly = peel_root(s.char_poly, s.k);
  s.integer_eigenvalues =
      integer_roots(s.nontrivial_poly, -s.k, s.k, &s.residual);
  s.exact = s.residual.size() <= 1;

  Rational xi = 0;
  for (const BigInt& e : s.integer_eigenvalues)
    xi = std::max(xi, Rational(abs(e)));
  if (!s.exact) {
    xi = std::max(xi, max_real_root_upper(s.residual, xi_slack()));
    xi = std::max(xi, max_real_root_upper(reflect(s.residual), xi_slack()));
  }
  s.xi = std::min(xi, Rational(s.k));
  s.xi_reaches_k = eval_int(s.nontrivial_poly, s.k) == 0 ||
                   eval_int(s.nontrivial_poly, -s.k) == 0;

  for (const auto& z : numeric_roots(s.nontrivial_poly))
    s.nontrivial_numeric.push_back(z.real());
  std::sort(s.nontrivial_numeric.rbegin(), s.nontrivial_numeric.rend());
  return s;
}

struct Rank4Params {
  BigInt k1, k2;
  std::int64_t p111, p112, p113, p121, p122, p123, p221, p222, p223;
};

Rank4Params rank4_params(const IntersectionTensor& t) {
  require_scheme_rank4(t);
  Rank4Params p;
  p.k1 = t.degree(1);
  p.k2 = t.degree(2);
  p.p111 = t.p(1, 1, 1);
  p.p112 = t.p(1, 1, 2);
  p.p113 = t.p(1, 1, 3);
  p.p121 = t.p(1, 2, 1);
  p.p122 = t.p(1, 2, 2);
  p.p123 = t.p(1, 2, 3);
  p.p221 = t.p(2, 2, 1);
  p.p222 = t.p(2, 2, 2);
  p.p223 = t.p(2, 2, 3);
  return p;
}

// Smallest-index-first optimal bottleneck assignment (sizes <= 10).
std::vector<int> bottleneck_matching(
    const std::vector<std::complex<double>>& a,
    const std::vector<std::complex<double>>& b) {
  const int n = int(a.size());
  std::vector<int> cur(n, -1), best(n, -1);
  std::vector<char> used(n, 0);
  double best_val = std::numeric_limits<double>::infinity();
  auto rec = [&](auto&& self, int i, double val) -> void {
    if (val >= best_val) return;
    if (i == n) {
      best_val = val;
      best = cur;
      return;
    }
    for (int j = 0; j < n; ++j) {
      if (used[j]) continue;
      used[j] = 1;
      cur[i] = j;
      self(self, i + 1, std::max(val, std::abs(a[i] - b[j])));
      used[j] = 0;
    }
  };
  rec(rec, 0, 0.0);
  return best;
}

double matching_cost(const std::vector<std::complex<double>>& a,
                     const std::vector<std::complex<double>>& b,
                     const std::vector<int>& m) {
  double v = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    v = std::max(v, std::abs(a[i] - b[m[i]]));
  return v;
}

}  // namespace

Spectrum constituent_spectrum(const IntersectionTensor& t, color_t i) {
  if (i >= color_t(t.rank())) throw Error(Errc::bad_params, "color out of range");
  bool diagonal = false;
  for (color_t d : t.diagonal_colors())
    if (d == i) diagonal = true;
  if (diagonal) throw Error(Errc::bad_params, "diagonal color has no constituent");
  if (t.paired(i) == i) return spectrum_of_set(t, i, {i}, false);
  std::vector<color_t> set{i, t.paired(i)};
  std::sort(set.begin(), set.end());
  return spectrum_of_set(t, i, std::move(set), true);
}

Spectrum union_spectrum(const IntersectionTensor& t,
                        std::vector<color_t> colors) {
  if (colors.empty()) throw Error(Errc::bad_params, "empty color set");
  std::sort(colors.begin(), colors.end());
  colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
  std::vector<color_t> ec = t.edge_colors();
  std::set<color_t> edge(ec.begin(), ec.end());
  for (color_t c : colors)
    if (!edge.count(c))
      throw Error(Errc::bad_params, "set must consist of edge colors");
  for (color_t c : colors)
    if (!std::binary_search(colors.begin(), colors.end(), t.paired(c)))
      throw Error(Errc::not_closed_under_pairing,
                  "color set not closed under pairing");
  return spectrum_of_set(t, colors.front(), std::move(colors), false);
}

CubicCoefficients rank4_cubic(const IntersectionTensor& t) {
  Rank4Params p = rank4_params(t);
  CubicCoefficients c;
  c.a1 = -(p.p111 + p.p122 - p.p113 - p.p123);
  c.a2 = BigInt(p.p122 - p.p123) * (p.p111 - p.p113) -
         BigInt(p.p112 - p.p113) * (p.p121 - p.p123) - (p.k1 - p.p113);
  c.a3 = BigInt(p.p122 - p.p123) * (p.k1 - p.p113) +
         BigInt(p.p112 - p.p113) * p.p123;

  // Audit: every nontrivial eigenvalue of A_1 must satisfy the cubic.
  IntPoly cubic{c.a3, c.a2, c.a1, BigInt(1)};
  Spectrum s = spectrum_of_set(t, 1, {1}, false);
  RatPoly eigen_set = square_free(to_rational_poly(s.nontrivial_poly));
  if (!poly_divides(eigen_set, to_rational_poly(cubic)))
    throw Error(Errc::soundness_failure,
                "cubic does not annihilate the nontrivial spectrum");
  return c;
}

Rational spectral_motion_bound(const BigInt& n, const BigInt& k,
                               const Rational& xi, const BigInt& q) {
  if (k <= 0 || xi < 0 || q < 0 || n < 1)
    throw Error(Errc::bad_params, "need k > 0, xi >= 0, q >= 0, n >= 1");
  Rational bound = Rational(n) * (Rational(k) - xi - Rational(q)) / Rational(k);
  return std::max(bound, Rational(0));
}

double xi_bound_x1(const IntersectionTensor& t, double eps) {
  Rank4Params p = rank4_params(t);
  Rational e(eps);
  if (!(e > 0) || Rational(1) / e > Rational(p.k1))
    throw Error(Errc::hypothesis_violated, "need 1/eps <= k_1");
  if (Rational(p.p113) > e * Rational(p.k1))
    throw Error(Errc::hypothesis_violated, "p(1,1,3) exceeds eps k_1");
  if (Rational(p.p123) > e * Rational(p.k1))
    throw Error(Errc::hypothesis_violated, "p(1,2,3) exceeds eps k_1");

  double p111 = double(p.p111), p122 = double(p.p122);
  double disc = (p111 - p122) * (p111 - p122) +
                4.0 * double(p.p112) * double(p.p121);
  double bound = (p111 + p122 + std::sqrt(disc)) / 2.0 +
                 25.0 * std::cbrt(eps) * p.k1.get_d();

  Spectrum s = spectrum_of_set(t, 1, {1}, false);
  if (to_double(s.xi) > bound + 1e-9)
    throw Error(Errc::soundness_failure, "bound fell below the exact radius");
  return bound;
}

double xi_bound_x12(const IntersectionTensor& t, double eps) {
  Rank4Params p = rank4_params(t);
  Rational e(eps);
  if (!(e > 0) || Rational(1) / e > Rational(p.k1))
    throw Error(Errc::hypothesis_violated, "need 1/eps <= k_1");
  if (Rational(p.p112) > e * Rational(p.k1))
    throw Error(Errc::hypothesis_violated, "p(1,1,2) exceeds eps k_1");
  Rational kmin = std::min(Rational(p.k1), Rational(p.k2));
  if (Rational(p.p113) > e * Rational(p.k1))
    throw Error(Errc::hypothesis_violated, "p(1,1,3) exceeds eps k_1");
  if (Rational(p.p123) > e * kmin)
    throw Error(Errc::hypothesis_violated, "p(1,2,3) exceeds eps min(k_1,k_2)");
  if (Rational(p.p223) > e * Rational(p.k2))
    throw Error(Errc::hypothesis_violated, "p(2,2,3) exceeds eps k_2");

  double p111 = double(p.p111), p122 = double(p.p122), p222 = double(p.p222);
  double disc = (p222 + p122 - p111) * (p222 + p122 - p111) +
                4.0 * p122 * double(p.p221);
  double bound = (p111 + p122 + p222 + std::sqrt(disc)) / 2.0 +
                 25.0 * std::cbrt(eps) * BigInt(p.k1 + p.k2).get_d();

  Spectrum s = spectrum_of_set(t, 1, {1, 2}, false);
  if (to_double(s.xi) > bound + 1e-9)
    throw Error(Errc::soundness_failure, "bound fell below the exact radius");
  return bound;
}

RootPerturbation root_perturbation(const RatPoly& f, const RatPoly& g) {
  RootPerturbation out;
  out.radius = ostrowski_radius(f, g);
  out.f_roots = numeric_roots(f);
  out.g_roots = numeric_roots(g);
  const int n = int(out.f_roots.size());
  out.matching.resize(n);
  if (n == 0) return out;

  // Sorted-order matching first; fall back to an optimal bottleneck
  // assignment for small degrees.
  std::vector<int> fi(n), gi(n);
  for (int i = 0; i < n; ++i) fi[i] = gi[i] = i;
  auto by_value = [](const std::vector<std::complex<double>>& v) {
    return [&v](int a, int b) {
      if (v[a].real() != v[b].real()) return v[a].real() < v[b].real();
      return v[a].imag() < v[b].imag();
    };
  };
  std::sort(fi.begin(), fi.end(), by_value(out.f_roots));
  std::sort(gi.begin(), gi.end(), by_value(out.g_roots));
  for (int i = 0; i < n; ++i) out.matching[fi[i]] = gi[i];
  out.achieved = matching_cost(out.f_roots, out.g_roots, out.matching);

  if (out.achieved > out.radius && n <= 10) {
    std::vector<int> opt = bottleneck_matching(out.f_roots, out.g_roots);
    double cost = matching_cost(out.f_roots, out.g_roots, opt);
    if (cost < out.achieved) {
      out.matching = std::move(opt);
      out.achieved = cost;
    }
  }
  if (out.achieved > out.radius + 1e-9)
    throw Error(Errc::soundness_failure,
                "no root matching within the perturbation radius");
  return out;
}

RootPerturbation root_perturbation(const IntPoly& f, const IntPoly& g) {
  return root_perturbation(to_rational_poly(f), to_rational_poly(g));
}

}  // namespace cc
