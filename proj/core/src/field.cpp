#include "vvlab/field.hpp"

#include "vvlab/errors.hpp"

namespace vvlab {

uint64_t pow_mod(uint64_t base, uint64_t exp, uint64_t p) {
  uint64_t r = 1 % p;
  base %= p;
  while (exp) {
    if (exp & 1) r = mul_mod(r, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1;
  }
  return r;
}

uint64_t inv_mod(uint64_t a, uint64_t p) {
  if (a == 0) throw InternalError("inverse of zero in F_p");
  // extended Euclid on (a, p)
  int64_t t = 0, newt = 1;
  int64_t r = static_cast<int64_t>(p), newr = static_cast<int64_t>(a % p);
  while (newr != 0) {
    int64_t q = r / newr;
    int64_t tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (r != 1) throw InternalError("non-invertible element; modulus not prime?");
  if (t < 0) t += static_cast<int64_t>(p);
  return static_cast<uint64_t>(t);
}

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

} // namespace vvlab
