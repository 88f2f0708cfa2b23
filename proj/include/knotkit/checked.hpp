#pragma once

#include <cstdint>
#include <numeric>

#include "knotkit/errors.hpp"

namespace knotkit {

using Coeff = std::int64_t;

inline Coeff checked_add(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

inline Coeff checked_sub(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

inline Coeff checked_mul(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

inline Coeff checked_neg(Coeff a) { return checked_sub(0, a); }

inline Coeff checked_abs(Coeff a) { return a < 0 ? checked_neg(a) : a; }

// Non-negative gcd; gcd(0, 0) = 0.
inline Coeff gcd_abs(Coeff a, Coeff b) { return std::gcd(checked_abs(a), checked_abs(b)); }

}  // namespace knotkit
