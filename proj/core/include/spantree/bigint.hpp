#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace spantree {

/// Arbitrary-precision signed integer.  Spanning-tree counts grow like
/// n^(n-2), so every count and determinant in this library is exact.
using BigInt = mpz_class;

/// Quotient a/b where b must divide a exactly.  A remainder here means a
/// counting formula was fed an inconsistent graph; that is always a bug,
/// so it surfaces as std::logic_error instead of a truncated result.
inline BigInt exact_div(const BigInt& a, const BigInt& b) {
  if (b == 0 || !mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) {
    throw std::logic_error("exact_div: " + a.get_str() + " is not divisible by " + b.get_str());
  }
  BigInt q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline BigInt bigint_pow(const BigInt& base, unsigned long exponent) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

}  // namespace spantree
