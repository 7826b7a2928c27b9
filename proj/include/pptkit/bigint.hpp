#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>

namespace pptkit {

/// Arbitrary-precision signed integer used for all triple arithmetic.
/// Components roughly triple per tree generation, so fixed-width words
/// overflow after a couple dozen levels.
using BigInt = boost::multiprecision::cpp_int;

inline bool is_odd(const BigInt& x) { return (x & 1) != 0; }
inline bool is_even(const BigInt& x) { return !is_odd(x); }

/// Floor of the square root; x must be nonnegative.
inline BigInt isqrt(const BigInt& x) { return sqrt(x); }

/// The exact root when x is a perfect square, nullopt otherwise.
inline std::optional<BigInt> exact_sqrt(const BigInt& x) {
  if (x < 0) return std::nullopt;
  BigInt r = sqrt(x);
  if (r * r != x) return std::nullopt;
  return r;
}

/// x mod m for a small positive modulus, as a machine int.
inline int mod_small(const BigInt& x, int m) {
  BigInt r = x % m;
  return r.convert_to<int>();
}

}  // namespace pptkit
