#include "vvlab/monomial.hpp"

#include "vvlab/errors.hpp"

namespace vvlab {

uint64_t weighted_degree(const Monomial& m, const std::vector<int64_t>& w) {
  uint64_t d = 0;
  for (size_t i = 0; i < m.e.size(); ++i) d += static_cast<uint64_t>(w[i]) * m.e[i];
  return d;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
  for (size_t i = 0; i < a.e.size(); ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r(a.e.size());
  for (size_t i = 0; i < a.e.size(); ++i) r.e[i] = a.e[i] + b.e[i];
  return r;
}

Monomial mono_div(const Monomial& a, const Monomial& b) {
  Monomial r(a.e.size());
  for (size_t i = 0; i < a.e.size(); ++i) {
    if (b.e[i] > a.e[i]) throw InternalError("monomial division not exact");
    r.e[i] = a.e[i] - b.e[i];
  }
  return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.e.size());
  for (size_t i = 0; i < a.e.size(); ++i) r.e[i] = a.e[i] > b.e[i] ? a.e[i] : b.e[i];
  return r;
}

bool mono_coprime(const Monomial& a, const Monomial& b) {
  for (size_t i = 0; i < a.e.size(); ++i)
    if (a.e[i] && b.e[i]) return false;
  return true;
}

namespace {

// graded revlex on the index range [lo, hi)
int cmp_block(const Monomial& a, const Monomial& b, size_t lo, size_t hi) {
  uint64_t da = 0, db = 0;
  for (size_t i = lo; i < hi; ++i) {
    da += a.e[i];
    db += b.e[i];
  }
  if (da != db) return da > db ? 1 : -1;
  for (size_t i = hi; i-- > lo;) {
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
  }
  return 0;
}

} // namespace

int mono_cmp(const Monomial& a, const Monomial& b, const MonomialOrder& ord) {
  size_t n = a.e.size();
  size_t split = static_cast<size_t>(ord.block_split);
  if (split > 0 && split < n) {
    if (int c = cmp_block(a, b, 0, split)) return c;
    return cmp_block(a, b, split, n);
  }
  return cmp_block(a, b, 0, n);
}

} // namespace vvlab
