#pragma once

// 128-bit helpers shared by the brute-force loops.

#include "totdk/errors.hpp"
#include "totdk/rational.hpp"

namespace totdk::detail {

__extension__ using i128 = __int128;
__extension__ using u128 = unsigned __int128;

inline Integer to_integer(i128 v) {
  const bool negative = v < 0;
  const u128 mag = negative ? -static_cast<u128>(v) : static_cast<u128>(v);
  Integer out = static_cast<std::uint64_t>(mag >> 64);
  out <<= 64;
  out += static_cast<std::uint64_t>(mag);
  return negative ? Integer(-out) : out;
}

inline i128 checked_mul(i128 x, i128 y) {
  i128 out = 0;
  if (__builtin_mul_overflow(x, y, &out)) throw OverflowError("128-bit product overflow");
  return out;
}

/// Running sum that throws OverflowError instead of wrapping.
class Accumulator {
 public:
  void add(i128 term) {
    if (__builtin_add_overflow(total_, term, &total_)) throw OverflowError("128-bit accumulator overflow");
  }
  Integer value() const { return to_integer(total_); }

 private:
  i128 total_ = 0;
};

}  // namespace totdk::detail
