#pragma once

#include <cstdint>

#include "zelchar/error.hpp"

namespace zelchar {

using Count = std::int64_t;

inline Count checked_add(Count x, Count y) {
  Count out;
  if (__builtin_add_overflow(x, y, &out)) throw Error(ErrorKind::Overflow, "integer addition");
  return out;
}

inline Count checked_sub(Count x, Count y) {
  Count out;
  if (__builtin_sub_overflow(x, y, &out)) throw Error(ErrorKind::Overflow, "integer subtraction");
  return out;
}

inline Count checked_mul(Count x, Count y) {
  Count out;
  if (__builtin_mul_overflow(x, y, &out)) throw Error(ErrorKind::Overflow, "integer multiplication");
  return out;
}

inline Count checked_factorial(Count n) {
  Count out = 1;
  for (Count k = 2; k <= n; ++k) out = checked_mul(out, k);
  return out;
}

inline Count checked_binomial(Count n, Count k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Count out = 1;
  for (Count i = 1; i <= k; ++i) {
    // out * (n - k + i) is divisible by i at every step
    out = checked_mul(out, n - k + i) / i;
  }
  return out;
}

}  // namespace zelchar
