#pragma once

#include <complex>
#include <vector>

#include "ccmotion/rational.hpp"

namespace cc {

// Coefficients low-to-high: f[0] + f[1] x + ... + f[deg] x^deg.
using IntPoly = std::vector<BigInt>;
using RatPoly = std::vector<Rational>;

// Exact characteristic polynomial of an integer matrix (row-major n x n)
// via the Faddeev-LeVerrier recurrence.  Monic, degree n.
IntPoly charpoly(const std::vector<BigInt>& matrix, int n);

BigInt eval_int(const IntPoly& f, const BigInt& x);
Rational eval_rat(const RatPoly& f, const Rational& x);

// f(x) -> f(-x).
IntPoly reflect(const IntPoly& f);

// Divides out (x - root); throws if the remainder is nonzero.
IntPoly peel_root(const IntPoly& f, const BigInt& root);

// All integer roots in [lo, hi] with multiplicity, peeled off one by one;
// *rest receives the remaining (integer-root-free over [lo,hi]) factor.
std::vector<BigInt> integer_roots(const IntPoly& f, const BigInt& lo,
                                  const BigInt& hi, IntPoly* rest);

// Number of distinct real roots in the half-open interval (a, b].
int sturm_count(const RatPoly& f, const Rational& a, const Rational& b);

// Monic polynomial with the same roots, each once.
RatPoly square_free(const RatPoly& f);

// True when divisor divides f exactly.
bool poly_divides(const RatPoly& divisor, const RatPoly& f);

// Integer M with every complex root of monic f of magnitude < M
// (Cauchy bound 1 + max |coefficient|).
BigInt root_magnitude_bound(const IntPoly& f);

// Certified u with no real roots of f above u, and u within `slack` of the
// largest real root when one exists (bisection on exact root counts).
Rational max_real_root_upper(const IntPoly& f, const Rational& slack);

// True iff f has no real root strictly below x0.
bool no_root_below(const IntPoly& f, const Rational& x0);

RatPoly to_rational_poly(const IntPoly& f);

// Perturbation radius for root multisets of monic polynomials of equal
// degree n: with M = max(1, max_i |coeff of x^(n-i)|^(1/i)) over both,
//   radius = 2 n (sum_j |g_j - f_j| (2M)^j)^(1/n)   (j = power of x).
// Every root of g lies within this radius of some root of f.
double ostrowski_radius(const RatPoly& f, const RatPoly& g);
double ostrowski_radius(const IntPoly& f, const IntPoly& g);

// Numeric roots of a monic polynomial via the companion matrix (advisory
// output only; exact reasoning goes through the routines above).
std::vector<std::complex<double>> numeric_roots(const RatPoly& f);
std::vector<std::complex<double>> numeric_roots(const IntPoly& f);

// Optimal bottleneck matching distance between equal-size root multisets
// (minimizes the largest matched-pair distance; sizes up to 10).
double root_matching_distance(const std::vector<std::complex<double>>& a,
                              const std::vector<std::complex<double>>& b);

}  // namespace cc
