#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace k3c {

using i64 = std::int64_t;

// Checked 64-bit arithmetic. Every arithmetic step in the library goes
// through these helpers; overflow throws instead of wrapping.

inline i64 add(i64 x, i64 y) {
  i64 r;
  if (__builtin_add_overflow(x, y, &r))
    throw std::overflow_error("integer overflow: " + std::to_string(x) + " + " + std::to_string(y));
  return r;
}

inline i64 sub(i64 x, i64 y) {
  i64 r;
  if (__builtin_sub_overflow(x, y, &r))
    throw std::overflow_error("integer overflow: " + std::to_string(x) + " - " + std::to_string(y));
  return r;
}

inline i64 mul(i64 x, i64 y) {
  i64 r;
  if (__builtin_mul_overflow(x, y, &r))
    throw std::overflow_error("integer overflow: " + std::to_string(x) + " * " + std::to_string(y));
  return r;
}

// Largest r with r*r <= v. Rejects negative input.
inline i64 isqrt_floor(i64 v) {
  if (v < 0) throw std::domain_error("isqrt of negative value");
  if (v == 0) return 0;
  i64 r = static_cast<i64>(std::sqrt(static_cast<double>(v)));
  while (r > 0 && r > v / r) --r;
  while ((r + 1) <= v / (r + 1)) ++r;
  return r;
}

inline bool is_square(i64 v, i64* root = nullptr) {
  if (v < 0) return false;
  i64 r = isqrt_floor(v);
  if (mul(r, r) != v) return false;
  if (root) *root = r;
  return true;
}

inline i64 binomial(i64 n, i64 k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  i64 r = 1;
  for (i64 i = 1; i <= k; ++i) {
    r = mul(r, n - k + i);
    r /= i;
  }
  return r;
}

}  // namespace k3c
