#include "vvlab/hilbert.hpp"

#include <algorithm>

namespace vvlab {

namespace {

bool divisible_by_any(const Monomial& m, const std::vector<Monomial>& leads) {
  for (const Monomial& l : leads)
    if (mono_divides(l, m)) return true;
  return false;
}

// pure-power bound per variable: least e with x_v^e in the ideal
std::optional<std::vector<Exp>> pure_power_bounds(
    const std::vector<Monomial>& leads, size_t nvars) {
  std::vector<Exp> bound(nvars, 0);
  std::vector<bool> found(nvars, false);
  for (const Monomial& l : leads) {
    int support = -1;
    bool pure = true;
    for (size_t v = 0; v < nvars; ++v) {
      if (l.e[v] == 0) continue;
      if (support >= 0) {
        pure = false;
        break;
      }
      support = static_cast<int>(v);
    }
    if (!pure || support < 0) continue;
    size_t v = static_cast<size_t>(support);
    if (!found[v] || l.e[v] < bound[v]) {
      bound[v] = l.e[v];
      found[v] = true;
    }
  }
  for (size_t v = 0; v < nvars; ++v)
    if (!found[v]) return std::nullopt;
  return bound;
}

void enumerate_box(const std::vector<Exp>& bound,
                   const std::vector<Monomial>& leads, Monomial& cur, size_t v,
                   std::vector<Monomial>& out) {
  // extensions of a divisible partial monomial stay divisible
  if (divisible_by_any(cur, leads)) return;
  if (v == bound.size()) {
    out.push_back(cur);
    return;
  }
  for (Exp e = 0; e < bound[v]; ++e) {
    cur.e[v] = e;
    enumerate_box(bound, leads, cur, v + 1, out);
  }
  cur.e[v] = 0;
}

void enumerate_degree(const std::vector<Monomial>& leads, Monomial& cur,
                      size_t v, uint64_t remaining, std::vector<Monomial>& out) {
  if (divisible_by_any(cur, leads)) return;
  if (v + 1 == cur.e.size()) {
    cur.e[v] = static_cast<Exp>(remaining);
    if (!divisible_by_any(cur, leads)) out.push_back(cur);
    cur.e[v] = 0;
    return;
  }
  for (uint64_t e = 0; e <= remaining; ++e) {
    cur.e[v] = static_cast<Exp>(e);
    enumerate_degree(leads, cur, v + 1, remaining - e, out);
  }
  cur.e[v] = 0;
}

} // namespace

std::optional<std::vector<Monomial>> standard_monomials(
    const std::vector<Monomial>& leads, size_t nvars) {
  for (const Monomial& l : leads)
    if (l.is_one()) return std::vector<Monomial>{}; // unit ideal
  if (nvars == 0) return std::vector<Monomial>{Monomial::one(0)};
  auto bound = pure_power_bounds(leads, nvars);
  if (!bound) return std::nullopt;
  std::vector<Monomial> out;
  Monomial cur(nvars);
  enumerate_box(*bound, leads, cur, 0, out);
  return out;
}

std::vector<Monomial> standard_monomials_of_degree(
    const std::vector<Monomial>& leads, size_t nvars, uint64_t d) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (d == 0 && !divisible_by_any(Monomial::one(0), leads))
      out.push_back(Monomial::one(0));
    return out;
  }
  Monomial cur(nvars);
  enumerate_degree(leads, cur, 0, d, out);
  return out;
}

std::vector<uint64_t> standard_monomial_counts(const std::vector<Monomial>& leads,
                                               size_t nvars, uint64_t max_degree) {
  std::vector<uint64_t> counts;
  counts.reserve(max_degree + 1);
  for (uint64_t d = 0; d <= max_degree; ++d)
    counts.push_back(standard_monomials_of_degree(leads, nvars, d).size());
  return counts;
}

int monomial_krull_dim(const std::vector<Monomial>& leads, size_t nvars) {
  for (const Monomial& l : leads)
    if (l.is_one()) return -1;
  int best = 0;
  for (uint64_t mask = 0; mask < (1ull << nvars); ++mask) {
    bool independent = true;
    for (const Monomial& l : leads) {
      bool supported = true;
      for (size_t v = 0; v < nvars; ++v)
        if (l.e[v] > 0 && !(mask & (1ull << v))) {
          supported = false;
          break;
        }
      if (supported) {
        independent = false;
        break;
      }
    }
    if (independent) best = std::max(best, __builtin_popcountll(mask));
  }
  return best;
}

} // namespace vvlab
