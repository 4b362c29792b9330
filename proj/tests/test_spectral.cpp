#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>

#include "ccmotion/families.hpp"
#include "ccmotion/poly.hpp"
#include "ccmotion/spectral.hpp"
#include "ccmotion/tensor.hpp"

#include "helpers.hpp"

using namespace cc;

namespace {

IntPoly cubic_poly(const CubicCoefficients& c) {
  return IntPoly{c.a3, c.a2, c.a1, BigInt(1)};
}

std::vector<BigInt> sorted_ints(std::vector<BigInt> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

// ---- polynomial toolkit -----------------------------------------------------

TEST_CASE("charpoly of small integer matrices") {
  // [[0,1],[1,0]] -> x^2 - 1.
  std::vector<BigInt> m = {BigInt(0), BigInt(1), BigInt(1), BigInt(0)};
  CHECK(charpoly(m, 2) == IntPoly{BigInt(-1), BigInt(0), BigInt(1)});
  // [[2]] -> x - 2.
  CHECK(charpoly({BigInt(2)}, 1) == IntPoly{BigInt(-2), BigInt(1)});
}

TEST_CASE("integer root peeling") {
  // (x-1)(x+1)(x-3) = x^3 - 3x^2 - x + 3.
  IntPoly f = {BigInt(3), BigInt(-1), BigInt(-3), BigInt(1)};
  IntPoly rest;
  auto roots = integer_roots(f, BigInt(-10), BigInt(10), &rest);
  CHECK(sorted_ints(roots) ==
        std::vector<BigInt>{BigInt(-1), BigInt(1), BigInt(3)});
  CHECK(rest == IntPoly{BigInt(1)});
  CHECK(eval_int(f, BigInt(3)) == BigInt(0));
  CHECK(eval_int(f, BigInt(2)) == BigInt(-3));
  CHECK_THROWS_AS(peel_root(f, BigInt(2)), Error);
}

TEST_CASE("sturm counting and square-free part") {
  // x^2 - 2.
  RatPoly f = {Rational(-2), Rational(0), Rational(1)};
  CHECK(sturm_count(f, Rational(0), Rational(2)) == 1);
  CHECK(sturm_count(f, Rational(-2), Rational(0)) == 1);
  CHECK(sturm_count(f, Rational(2), Rational(5)) == 0);
  // (x-1)^2 has square-free part x-1.
  RatPoly sq = {Rational(1), Rational(-2), Rational(1)};
  CHECK(square_free(sq).size() == 2);
  CHECK(poly_divides(square_free(sq), sq));
  CHECK_FALSE(poly_divides(f, sq));
}

TEST_CASE("certified real root localization") {
  IntPoly f = {BigInt(-2), BigInt(0), BigInt(1)};  // x^2 - 2
  Rational slack(1, 1024);
  Rational u = max_real_root_upper(f, slack);
  double root = std::sqrt(2.0);
  CHECK(to_double(u) >= root - 1e-12);
  CHECK(to_double(u) <= root + to_double(slack) + 1e-12);
  CHECK(no_root_below(f, Rational(-2)));
  CHECK_FALSE(no_root_below(f, Rational(0)));
  CHECK(root_magnitude_bound(f) == BigInt(3));  // 1 + max |coeff|
}

TEST_CASE("numeric roots and bottleneck matching") {
  IntPoly f = {BigInt(1), BigInt(0), BigInt(1)};  // x^2 + 1
  auto roots = numeric_roots(f);
  REQUIRE(roots.size() == 2);
  for (const auto& r : roots) {
    CHECK(std::abs(r.real()) < 1e-9);
    CHECK(std::abs(std::abs(r.imag()) - 1.0) < 1e-9);
  }
  std::vector<std::complex<double>> a = {{0, 1}, {0, -1}};
  std::vector<std::complex<double>> b = {{0, -1.01}, {0, 1.02}};
  CHECK(root_matching_distance(a, b) == doctest::Approx(0.02));
}

TEST_CASE("perturbed polynomials keep matched roots within the radius") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> coef(-9, 9);
  std::uniform_int_distribution<int> degree(3, 4);
  std::uniform_int_distribution<int> bump(-1, 1);
  for (int trial = 0; trial < 300; ++trial) {
    int deg = degree(rng);
    IntPoly f(deg + 1);
    f[deg] = 1;
    for (int i = 0; i < deg; ++i) f[i] = coef(rng);
    IntPoly g = f;
    int at = static_cast<int>(rng() % deg);
    g[at] += bump(rng);
    RootPerturbation rp = root_perturbation(f, g);
    CHECK(rp.achieved <= rp.radius + 1e-9);
    CHECK(rp.radius == doctest::Approx(ostrowski_radius(f, g)));
    // The matching is a permutation achieving the reported distance.
    std::vector<int> seen(deg, 0);
    for (int i = 0; i < deg; ++i) {
      seen[rp.matching[i]] += 1;
      CHECK(std::abs(rp.f_roots[i] - rp.g_roots[rp.matching[i]]) <=
            rp.achieved + 1e-9);
    }
    CHECK(std::all_of(seen.begin(), seen.end(),
                      [](int c) { return c == 1; }));
    if (g == f) {
      CHECK(rp.radius == 0.0);
      CHECK(rp.achieved == 0.0);
    }
  }
}

// ---- constituent spectra ----------------------------------------------------

TEST_CASE("triangular constituents have integer spectra") {
  // J(m,2), color 1: nontrivial eigenvalues m-4 and -2.
  for (int m = 5; m <= 9; ++m) {
    CAPTURE(m);
    IntersectionTensor t = intersection_tensor(gen_johnson(m, 2));
    Spectrum sp = constituent_spectrum(t, 1);
    CHECK(sp.k == BigInt(2 * (m - 2)));
    CHECK(sp.exact);
    CHECK_FALSE(sp.symmetrized);
    CHECK(sorted_ints(sp.integer_eigenvalues) ==
          std::vector<BigInt>{BigInt(-2), BigInt(m - 4)});
    CHECK(sp.xi == Rational(std::max<std::int64_t>(std::abs(m - 4), 2)));
    CHECK_FALSE(sp.xi_reaches_k);
  }
}

TEST_CASE("hamming constituents have integer spectra") {
  // H(2,m), color 1: nontrivial eigenvalues m-2 and -2.
  for (int m = 3; m <= 4; ++m) {
    CAPTURE(m);
    IntersectionTensor t = intersection_tensor(gen_hamming(2, m));
    Spectrum sp = constituent_spectrum(t, 1);
    CHECK(sp.k == BigInt(2 * (m - 1)));
    CHECK(sp.exact);
    CHECK(sorted_ints(sp.integer_eigenvalues) ==
          std::vector<BigInt>{BigInt(-2), BigInt(m - 2)});
  }
}

TEST_CASE("rank-4 cubic of the 3-cube") {
  CubicCoefficients c = rank4_cubic(intersection_tensor(gen_hamming(3, 2)));
  CHECK(c.a1 == BigInt(3));
  CHECK(c.a2 == BigInt(-1));
  CHECK(c.a3 == BigInt(-3));
  IntPoly rest;
  auto roots = integer_roots(cubic_poly(c), BigInt(-10), BigInt(10), &rest);
  CHECK(sorted_ints(roots) ==
        std::vector<BigInt>{BigInt(-3), BigInt(-1), BigInt(1)});
  CHECK_THROWS_AS(rank4_cubic(intersection_tensor(gen_johnson(5, 2))), Error);
}

TEST_CASE("cubic roots track dense eigenvalues on rank-4 schemes") {
  for (const auto& inst :
       {cctest::Named{"h33", gen_hamming(3, 3)},
        cctest::Named{"j63", gen_johnson(6, 3)},
        cctest::Named{"cyc", cyclotomic_configuration(13, 3)},
        cctest::Named{"crown4", gen_crown(4)}}) {
    CAPTURE(inst.name);
    IntersectionTensor t = intersection_tensor(inst.cfg);
    CubicCoefficients c = rank4_cubic(t);
    auto roots = numeric_roots(cubic_poly(c));
    std::vector<double> dense =
        cctest::dense_union_eigenvalues(inst.cfg, {1});
    // Drop one copy of the trivial eigenvalue k (the largest).
    dense.pop_back();
    for (double ev : dense) {
      double best = 1e100;
      for (const auto& r : roots)
        best = std::min(best, std::abs(r - std::complex<double>(ev, 0.0)));
      CHECK(best <= 1e-6);
    }
  }
}

TEST_CASE("paley spectrum is certified though irrational") {
  Configuration p13 = paley_configuration(13);
  Spectrum sp = union_spectrum(intersection_tensor(p13), {1});
  CHECK(sp.k == BigInt(6));
  CHECK_FALSE(sp.exact);
  CHECK(sp.integer_eigenvalues.empty());
  double truth = (1.0 + std::sqrt(13.0)) / 2.0;
  CHECK(to_double(sp.xi) >= truth - 1e-12);       // upper bound
  CHECK(to_double(sp.xi) <= truth + 2e-6);        // within 2^-20
  REQUIRE(sp.nontrivial_numeric.size() == 2);
  CHECK(sp.nontrivial_numeric[0] ==
        doctest::Approx((-1.0 + std::sqrt(13.0)) / 2.0));
}

TEST_CASE("union over all edge colors is the complete graph") {
  IntersectionTensor t = intersection_tensor(gen_johnson(6, 2));
  Spectrum sp = union_spectrum(t, {1, 2});
  CHECK(sp.k == BigInt(14));
  CHECK(sp.exact);
  CHECK(sp.xi == Rational(1));
  CHECK(sorted_ints(sp.integer_eigenvalues) ==
        std::vector<BigInt>{BigInt(-1)});
}

TEST_CASE("oriented colors are symmetrized") {
  Configuration p7 = paley_configuration(7);
  Spectrum sp = constituent_spectrum(intersection_tensor(p7), 1);
  CHECK(sp.symmetrized);
  CHECK(sp.colors == std::vector<color_t>{1, 2});
  CHECK(sp.k == BigInt(6));  // the symmetrized union is complete
}

TEST_CASE("spectral motion bound") {
  // T(7): n (k - xi - q)/k = 21 (10 - 3 - 5)/10 = 21/5.
  IntersectionTensor t = intersection_tensor(gen_johnson(7, 2));
  Spectrum sp = constituent_spectrum(t, 1);
  CHECK(sp.xi == Rational(3));
  CHECK(t.union_max_common({1}) == 5);
  CHECK(spectral_motion_bound(BigInt(21), BigInt(10), sp.xi, BigInt(5)) ==
        Rational(21, 5));
  // Clamped at zero when q + xi reaches k.
  CHECK(spectral_motion_bound(BigInt(10), BigInt(3), Rational(2), BigInt(2)) ==
        Rational(0));
}

TEST_CASE("closed-form xi bound dominates the exact value") {
  IntersectionTensor t =
      intersection_tensor(cyclotomic_configuration(13, 3));
  // p(1,1,3) = 2 and p(1,2,3) = 1, so eps = 1/2 satisfies both hypotheses.
  double bound = xi_bound_x1(t, 0.5);
  double exact = to_double(constituent_spectrum(t, 1).xi);
  CHECK(bound >= exact - 1e-9);
  try {
    xi_bound_x1(t, 0.01);  // p(1,1,3) = 2 > eps k1
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code == Errc::hypothesis_violated);
  }

  double bound12 = xi_bound_x12(t, 0.5);
  double exact12 = to_double(union_spectrum(t, {1, 2}).xi);
  CHECK(bound12 >= exact12 - 1e-9);
}
