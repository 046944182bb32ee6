#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <vector>

namespace k3s {

// Lattice coordinates and intersection numbers fit comfortably in 64 bits
// for the ranks and entry sizes this library handles; exact wide arithmetic
// is used wherever division or large products appear.
using i64 = std::int64_t;

// Plain value semantics: expression templates stay off so that compound
// arithmetic never holds references to temporaries.
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                          boost::multiprecision::et_off>;

using IVec = std::vector<i64>;
using IMat = std::vector<std::vector<i64>>;

// Binomial coefficient as the polynomial x(x-1)...(x-k+1)/k!, defined for
// any integer x (negative arguments included). k < 0 gives 0.
inline Int binom(const Int& x, i64 k) {
  if (k < 0) return 0;
  Int num = 1;
  for (i64 i = 0; i < k; ++i) num *= (x - i);
  Int den = 1;
  for (i64 i = 2; i <= k; ++i) den *= i;
  return num / den;
}

inline Int binom(i64 x, i64 k) { return binom(Int(x), k); }

// Floor of the square root of a non-negative rational.
inline Int floor_sqrt(const Rat& v) {
  Int p = numerator(v), q = denominator(v);
  if (p < 0) return -1;
  // floor(sqrt(p/q)) = floor(sqrt(p*q))/q only approximately; bisect instead.
  Int lo = 0, hi = 1;
  while (hi * hi * q <= p) hi <<= 1;
  while (lo < hi - 1) {
    Int mid = (lo + hi) / 2;
    if (mid * mid * q <= p)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

}  // namespace k3s
