#pragma once

#include <cstdint>

namespace vvlab {

// Arithmetic in Z/p for a word-size prime p (p < 2^31).  Values are kept
// normalized in [0, p).

inline uint64_t add_mod(uint64_t a, uint64_t b, uint64_t p) {
  uint64_t s = a + b;
  return s >= p ? s - p : s;
}

inline uint64_t sub_mod(uint64_t a, uint64_t b, uint64_t p) {
  return a >= b ? a - b : a + p - b;
}

inline uint64_t neg_mod(uint64_t a, uint64_t p) { return a == 0 ? 0 : p - a; }

inline uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t p) {
  return (a * b) % p;
}

uint64_t pow_mod(uint64_t base, uint64_t exp, uint64_t p);
uint64_t inv_mod(uint64_t a, uint64_t p);
bool is_prime(uint64_t n);

} // namespace vvlab
