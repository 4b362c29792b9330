#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace cc {

using BigInt = mpz_class;
using Rational = mpq_class;

inline Rational rational(long long num, long long den = 1) {
  Rational r(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den)));
  r.canonicalize();
  return r;
}

// "num/den" in lowest terms ("num" when den == 1).
std::string to_string(const Rational& r);

double to_double(const Rational& r);

BigInt binomial(long n, long k);

// Smallest s >= 0 with s*s >= x.  Requires x >= 0.
BigInt isqrt_ceil(const BigInt& x);

BigInt pow_big(const BigInt& base, unsigned long exp);

}  // namespace cc
