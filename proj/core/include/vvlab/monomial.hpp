#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace vvlab {

using Exp = uint32_t;
// inline capacity covers every ring built here (tag + x-block + T-block)
using ExpVec = boost::container::small_vector<Exp, 12>;

// Dense exponent vector, one entry per ambient variable.
struct Monomial {
  ExpVec e;

  Monomial() = default;
  explicit Monomial(size_t nvars) : e(nvars, 0) {}
  static Monomial one(size_t nvars) { return Monomial(nvars); }

  size_t nvars() const { return e.size(); }
  uint64_t total_degree() const {
    uint64_t d = 0;
    for (Exp x : e) d += x;
    return d;
  }
  bool is_one() const {
    for (Exp x : e)
      if (x) return false;
    return true;
  }
  bool operator==(const Monomial&) const = default;
};

uint64_t weighted_degree(const Monomial& m, const std::vector<int64_t>& w);
bool mono_divides(const Monomial& a, const Monomial& b); // a | b
Monomial mono_mul(const Monomial& a, const Monomial& b);
Monomial mono_div(const Monomial& a, const Monomial& b); // a / b, requires b | a
Monomial mono_lcm(const Monomial& a, const Monomial& b);
bool mono_coprime(const Monomial& a, const Monomial& b);

// Graded reverse lexicographic order; block_split > 0 makes the first
// block_split variables a leading graded-revlex block (elimination order).
struct MonomialOrder {
  int block_split = 0;
  bool operator==(const MonomialOrder&) const = default;
};

// three-way compare, >0 when a > b
int mono_cmp(const Monomial& a, const Monomial& b, const MonomialOrder& ord);

struct MonomialHash {
  size_t operator()(const Monomial& m) const {
    size_t h = 1469598103934665603ull;
    for (Exp x : m.e) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

} // namespace vvlab
