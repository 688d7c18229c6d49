#pragma once

#include <cstdint>
#include <string>

#include "tkiss/errors.hpp"

namespace tkiss {

using Int = std::int64_t;

// Overflow-checked arithmetic. Every coordinate computation goes through these so
// that a too-large (m, n) throws instead of wrapping.

inline Int checked_add(Int a, Int b) {
  Int out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw OverflowError("integer overflow in " + std::to_string(a) + " + " + std::to_string(b));
  }
  return out;
}

inline Int checked_sub(Int a, Int b) {
  Int out;
  if (__builtin_sub_overflow(a, b, &out)) {
    throw OverflowError("integer overflow in " + std::to_string(a) + " - " + std::to_string(b));
  }
  return out;
}

inline Int checked_mul(Int a, Int b) {
  Int out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw OverflowError("integer overflow in " + std::to_string(a) + " * " + std::to_string(b));
  }
  return out;
}

inline Int checked_neg(Int a) { return checked_sub(0, a); }

/// 2^k for 0 <= k <= 62.
inline Int pow2(Int k) {
  if (k < 0 || k > 62) {
    throw OverflowError("2^" + std::to_string(k) + " does not fit in 64 bits");
  }
  return Int{1} << k;
}

} // namespace tkiss
