#pragma once

#include <complex>
#include <vector>

#include "ccmotion/poly.hpp"
#include "ccmotion/rational.hpp"
#include "ccmotion/tensor.hpp"

namespace cc {

// Eigenvalue data of a constituent (or a union of constituents), obtained
// exactly from the left-multiplication matrix B with B[t][j] = p(i,j,t)
// summed over the color set: the eigenvalue set of the n x n adjacency
// matrix equals the root set of charpoly(B).
struct Spectrum {
  color_t color = 0;              // requested color (first of the set)
  std::vector<color_t> colors;    // set actually analyzed
  bool symmetrized = false;       // oriented input widened to {i, i*}
  BigInt k;                       // trivial (Perron) eigenvalue
  IntPoly char_poly;              // of the B-matrix
  IntPoly nontrivial_poly;        // char_poly with one (x - k) removed
  std::vector<BigInt> integer_eigenvalues;  // exact roots, peeled
  IntPoly residual;               // nontrivial_poly / prod (x - int root)
  bool exact = false;             // residual constant: set fully integer
  // Certified upper bound on max |nontrivial eigenvalue| (equal to it when
  // `exact`; otherwise within 2^-20), clamped at k.
  Rational xi;
  bool xi_reaches_k = false;      // k or -k is a nontrivial eigenvalue
  std::vector<double> nontrivial_numeric;  // advisory, descending
};

// Symmetric color: exact spectrum of X_i.  Oriented color: spectrum of the
// symmetrized union X_{i,i*}, flagged.
Spectrum constituent_spectrum(const IntersectionTensor& t, color_t i);

// Spectrum of the union graph over a pairing-closed set of edge colors.
Spectrum union_spectrum(const IntersectionTensor& t,
                        std::vector<color_t> colors);

// Exact coefficients of the cubic x^3 + a1 x^2 + a2 x + a3 annihilating
// every nontrivial eigenvalue of A_1 in a rank-4 association scheme.
struct CubicCoefficients {
  BigInt a1, a2, a3;
};
CubicCoefficients rank4_cubic(const IntersectionTensor& t);

// max(0, n (k - xi - q) / k): motion lower bound for a k-regular graph
// with zero-weight spectral radius <= xi and every vertex pair having at
// most q common neighbors.
Rational spectral_motion_bound(const BigInt& n, const BigInt& k,
                               const Rational& xi, const BigInt& q);

// Closed-form bound on xi(X_1) for a rank-4 scheme whose color-3
// intersection numbers are small:
//   (p111 + p122 + sqrt((p111-p122)^2 + 4 p112 p121)) / 2 + 25 eps^(1/3) k1,
// requiring 1/eps <= k1 and p(1,i,3) <= eps k1 for i = 1,2.  The exact
// xi(X_1) is recomputed and checked against the bound.
double xi_bound_x1(const IntersectionTensor& t, double eps);

// Same for the union X_{1,2}:
//   (p111 + p122 + p222
//      + sqrt((p222 + p122 - p111)^2 + 4 p122 p221)) / 2
//      + 25 eps^(1/3) (k1 + k2),
// requiring 1/eps <= k1, p(1,1,2) <= eps k1, and p(i,j,3) <= eps min(ki,kj)
// for i,j in {1,2}.
double xi_bound_x12(const IntersectionTensor& t, double eps);

// Root perturbation: radius within which the root multisets of two monic
// equal-degree polynomials can be matched, plus an explicit matching that
// achieves it (verified numerically).
struct RootPerturbation {
  double radius = 0.0;    // certified pairing radius
  double achieved = 0.0;  // max matched-pair distance (<= radius)
  std::vector<std::complex<double>> f_roots, g_roots;
  std::vector<int> matching;  // f_roots[i] <-> g_roots[matching[i]]
};
RootPerturbation root_perturbation(const RatPoly& f, const RatPoly& g);
RootPerturbation root_perturbation(const IntPoly& f, const IntPoly& g);

}  // namespace cc
