#include "ccmotion/poly.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

#include "ccmotion/error.hpp"

namespace cc {
namespace {

constexpr int kMaxCharpolyDim = 64;

void require_monic(const IntPoly& f) {
  if (f.empty() || f.back() != 1)
    throw Error(Errc::not_monic, "polynomial must be monic");
}

RatPoly to_rat(const IntPoly& f) {
  RatPoly g(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) g[i] = Rational(f[i]);
  return g;
}

void trim(RatPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

RatPoly derivative(const RatPoly& f) {
  RatPoly d;
  for (std::size_t i = 1; i < f.size(); ++i) d.push_back(f[i] * long(i));
  trim(d);
  return d;
}

// Remainder of a by b (b nonzero), scaled by a positive rational so the
// leading coefficient has magnitude 1 (sign-preserving, keeps numbers tame).
RatPoly poly_mod(RatPoly a, const RatPoly& b) {
  while (a.size() >= b.size() && !a.empty()) {
    Rational q = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= q * b[i];
    a.pop_back();
    trim(a);
  }
  if (!a.empty()) {
    Rational lead = abs(a.back());
    for (Rational& c : a) c /= lead;
  }
  return a;
}

// Exact division (throws if remainder nonzero).
RatPoly poly_div(const RatPoly& a, const RatPoly& b) {
  RatPoly rem = a, quot(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  while (rem.size() >= b.size() && !rem.empty()) {
    Rational q = rem.back() / b.back();
    std::size_t shift = rem.size() - b.size();
    quot[shift] = q;
    for (std::size_t i = 0; i < b.size(); ++i) rem[i + shift] -= q * b[i];
    rem.pop_back();
    trim(rem);
  }
  if (!rem.empty())
    throw Error(Errc::soundness_failure, "polynomial division not exact");
  return quot;
}

RatPoly poly_gcd(RatPoly a, RatPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    RatPoly r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Rational lead = a.back();
    for (Rational& c : a) c /= lead;
  }
  return a;
}

RatPoly square_free_part(const IntPoly& f) { return square_free(to_rat(f)); }

// Peel (x - r) off a rational polynomial known to vanish at r.
RatPoly peel_rat(const RatPoly& f, const Rational& r) {
  RatPoly q(f.size() - 1);
  Rational carry = 0;
  for (std::size_t i = f.size(); i-- > 1;) {
    carry = f[i] + r * carry;
    q[i - 1] = carry;
  }
  return q;
}

std::vector<RatPoly> sturm_chain(const RatPoly& g) {
  std::vector<RatPoly> chain{g, derivative(g)};
  while (!chain.back().empty()) {
    RatPoly r = poly_mod(chain[chain.size() - 2], chain.back());
    for (Rational& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  chain.pop_back();
  return chain;
}

int sign_variations(const std::vector<RatPoly>& chain, const Rational& x) {
  int var = 0, prev = 0;
  for (const RatPoly& f : chain) {
    Rational v = eval_rat(f, x);
    int s = sgn(v);
    if (s != 0) {
      if (prev != 0 && s != prev) ++var;
      prev = s;
    }
  }
  return var;
}

// Distinct roots of square-free g in (a, b], exact.
int count_half_open(RatPoly g, const Rational& a, const Rational& b) {
  trim(g);
  if (g.empty())
    throw Error(Errc::bad_params, "zero polynomial has no root count");
  if (a >= b) return 0;
  int extra = eval_rat(g, b) == 0 ? 1 : 0;
  while (g.size() > 1 && eval_rat(g, a) == 0) g = peel_rat(g, a);
  while (g.size() > 1 && eval_rat(g, b) == 0) g = peel_rat(g, b);
  if (g.size() <= 1) return extra;
  auto chain = sturm_chain(g);
  return extra + sign_variations(chain, a) - sign_variations(chain, b);
}

}  // namespace

IntPoly charpoly(const std::vector<BigInt>& matrix, int n) {
  if (n < 1 || matrix.size() != std::size_t(n) * n)
    throw Error(Errc::bad_params, "matrix must be square and nonempty");
  if (n > kMaxCharpolyDim)
    throw Error(Errc::cap_exceeded, "matrix too large for exact charpoly");
  IntPoly c(n + 1);
  c[n] = 1;
  std::vector<BigInt> work(std::size_t(n) * n);  // running auxiliary matrix
  for (int i = 0; i < n; ++i) work[std::size_t(i) * n + i] = 1;
  std::vector<BigInt> prod(std::size_t(n) * n);
  for (int k = 1; k <= n; ++k) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        BigInt s = 0;
        for (int l = 0; l < n; ++l)
          s += matrix[std::size_t(i) * n + l] * work[std::size_t(l) * n + j];
        prod[std::size_t(i) * n + j] = s;
      }
    BigInt tr = 0;
    for (int i = 0; i < n; ++i) tr += prod[std::size_t(i) * n + i];
    BigInt q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), tr.get_mpz_t(),
                BigInt(k).get_mpz_t());
    if (r != 0)
      throw Error(Errc::soundness_failure, "trace recurrence not divisible");
    c[n - k] = -q;
    work = prod;
    for (int i = 0; i < n; ++i) work[std::size_t(i) * n + i] += c[n - k];
  }
  return c;
}

BigInt eval_int(const IntPoly& f, const BigInt& x) {
  BigInt v = 0;
  for (std::size_t i = f.size(); i-- > 0;) v = v * x + f[i];
  return v;
}

Rational eval_rat(const RatPoly& f, const Rational& x) {
  Rational v = 0;
  for (std::size_t i = f.size(); i-- > 0;) v = v * x + f[i];
  return v;
}

IntPoly reflect(const IntPoly& f) {
  IntPoly g = f;
  for (std::size_t i = 1; i < g.size(); i += 2) g[i] = -g[i];
  return g;
}

IntPoly peel_root(const IntPoly& f, const BigInt& root) {
  if (f.size() < 2) throw Error(Errc::bad_params, "degree must be >= 1");
  IntPoly q(f.size() - 1);
  BigInt carry = 0;
  for (std::size_t i = f.size(); i-- > 1;) {
    carry = f[i] + root * carry;
    q[i - 1] = carry;
  }
  if (f[0] + root * carry != 0)
    throw Error(Errc::soundness_failure, "claimed root does not divide");
  return q;
}

std::vector<BigInt> integer_roots(const IntPoly& f, const BigInt& lo,
                                  const BigInt& hi, IntPoly* rest) {
  if (hi - lo > 1000000)
    throw Error(Errc::cap_exceeded, "integer root scan range too large");
  IntPoly cur = f;
  std::vector<BigInt> roots;
  for (BigInt x = lo; x <= hi; ++x)
    while (cur.size() > 1 && eval_int(cur, x) == 0) {
      roots.push_back(x);
      cur = peel_root(cur, x);
    }
  if (rest) *rest = cur;
  return roots;
}

int sturm_count(const RatPoly& f, const Rational& a, const Rational& b) {
  return count_half_open(square_free(f), a, b);
}

RatPoly square_free(const RatPoly& f) {
  RatPoly g = f;
  trim(g);
  if (g.empty())
    throw Error(Errc::bad_params, "zero polynomial has no square-free part");
  Rational lead = g.back();
  for (Rational& c : g) c /= lead;
  if (g.size() <= 2) return g;
  RatPoly common = poly_gcd(g, derivative(g));
  if (common.size() <= 1) return g;
  return poly_div(g, common);
}

bool poly_divides(const RatPoly& divisor, const RatPoly& f) {
  RatPoly d = divisor, g = f;
  trim(d);
  trim(g);
  if (d.empty()) throw Error(Errc::bad_params, "zero divisor");
  if (g.empty()) return true;
  return poly_mod(g, d).empty();
}

BigInt root_magnitude_bound(const IntPoly& f) {
  require_monic(f);
  BigInt m = 0;
  for (std::size_t i = 0; i + 1 < f.size(); ++i)
    m = std::max(m, BigInt(abs(f[i])));
  return m + 1;
}

Rational max_real_root_upper(const IntPoly& f, const Rational& slack) {
  require_monic(f);
  if (slack <= 0) throw Error(Errc::bad_params, "slack must be positive");
  if (f.size() == 1)
    throw Error(Errc::bad_params, "constant polynomial has no roots");
  RatPoly g = square_free_part(f);
  BigInt m = root_magnitude_bound(f);
  Rational lo(-m), hi(m);
  if (count_half_open(g, lo, hi) == 0) return lo;  // no real roots at all
  while (hi - lo > slack) {
    Rational mid = (lo + hi) / 2;
    if (count_half_open(g, mid, Rational(m)) >= 1)
      lo = mid;
    else
      hi = mid;
  }
  return hi;
}

bool no_root_below(const IntPoly& f, const Rational& x0) {
  require_monic(f);
  if (f.size() == 1) return true;
  RatPoly g = square_free_part(f);
  BigInt m = root_magnitude_bound(f);
  if (x0 <= Rational(-m)) return true;
  int upto = count_half_open(g, Rational(-m), x0);
  if (eval_rat(g, x0) == 0) --upto;
  return upto == 0;
}

RatPoly to_rational_poly(const IntPoly& f) { return to_rat(f); }

double ostrowski_radius(const RatPoly& f, const RatPoly& g) {
  if (f.empty() || f.back() != 1 || g.empty() || g.back() != 1)
    throw Error(Errc::not_monic, "polynomial must be monic");
  if (f.size() != g.size())
    throw Error(Errc::degree_mismatch, "degrees must match");
  const int n = int(f.size()) - 1;
  if (n < 1) return 0.0;
  bool same = true;
  for (int i = 0; i < n; ++i)
    if (f[i] != g[i]) same = false;
  if (same) return 0.0;
  double m = 1.0;
  for (int j = 0; j < n; ++j) {
    double cf = std::abs(f[j].get_d());
    double cg = std::abs(g[j].get_d());
    m = std::max(m, std::pow(cf, 1.0 / (n - j)));
    m = std::max(m, std::pow(cg, 1.0 / (n - j)));
  }
  double sum = 0.0;
  for (int j = 0; j < n; ++j)
    sum += Rational(abs(g[j] - f[j])).get_d() * std::pow(2.0 * m, j);
  return 2.0 * n * std::pow(sum, 1.0 / n);
}

double ostrowski_radius(const IntPoly& f, const IntPoly& g) {
  return ostrowski_radius(to_rat(f), to_rat(g));
}

std::vector<std::complex<double>> numeric_roots(const RatPoly& f) {
  if (f.empty() || f.back() != 1)
    throw Error(Errc::not_monic, "polynomial must be monic");
  const int n = int(f.size()) - 1;
  if (n == 0) return {};
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -f[i].get_d();
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion);
  std::vector<std::complex<double>> roots(n);
  for (int i = 0; i < n; ++i) roots[i] = solver.eigenvalues()(i);
  return roots;
}

std::vector<std::complex<double>> numeric_roots(const IntPoly& f) {
  return numeric_roots(to_rat(f));
}

double root_matching_distance(const std::vector<std::complex<double>>& a,
                              const std::vector<std::complex<double>>& b) {
  if (a.size() != b.size())
    throw Error(Errc::degree_mismatch, "root multisets must have equal size");
  const int n = int(a.size());
  if (n == 0) return 0.0;
  if (n > 10) throw Error(Errc::cap_exceeded, "matching limited to degree 10");
  std::vector<char> used(n, 0);
  double best = std::numeric_limits<double>::infinity();
  auto rec = [&](auto&& self, int i, double cur) -> void {
    if (cur >= best) return;
    if (i == n) {
      best = cur;
      return;
    }
    for (int j = 0; j < n; ++j) {
      if (used[j]) continue;
      used[j] = 1;
      self(self, i + 1, std::max(cur, std::abs(a[i] - b[j])));
      used[j] = 0;
    }
  };
  rec(rec, 0, 0.0);
  return best;
}

}  // namespace cc
