#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "vvlab/ideal.hpp"
#include "vvlab/poly.hpp"

namespace vvlab {

struct ModTerm {
  uint32_t comp = 0;
  Monomial mon;
  uint64_t coeff = 0;
  bool operator==(const ModTerm&) const = default;
};

// Element of a free module R^rank under the position-over-term order
// (lower component wins, ties by the ring's monomial order).
class VecPoly {
public:
  VecPoly() = default;
  VecPoly(RingPtr ring, uint32_t rank) : ring_(std::move(ring)), rank_(rank) {}
  VecPoly(RingPtr ring, uint32_t rank, std::vector<ModTerm> raw);

  static VecPoly from_poly(const Polynomial& f, uint32_t rank, uint32_t comp);

  const RingPtr& ring() const { return ring_; }
  uint32_t rank() const { return rank_; }
  const std::vector<ModTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  const ModTerm& lead() const;

  Polynomial component(uint32_t c) const;
  VecPoly slice(uint32_t lo, uint32_t hi) const; // components [lo, hi)
  bool supported_below(uint32_t c) const;        // all terms have comp < c
  bool supported_at_or_above(uint32_t c) const;

  VecPoly times_term(const Term& t) const;
  VecPoly sub_term_mul(const Term& t, const VecPoly& g) const; // this - t*g
  VecPoly scaled(uint64_t c) const;
  VecPoly monic() const;

  bool operator==(const VecPoly& o) const {
    return rank_ == o.rank_ && terms_ == o.terms_;
  }

  std::string str() const;

private:
  void normalize();

  RingPtr ring_;
  uint32_t rank_ = 0;
  std::vector<ModTerm> terms_;
};

VecPoly module_normal_form(const VecPoly& v, const std::vector<VecPoly>& basis);

// Reduced module Groebner basis (POT order).
std::vector<VecPoly> module_groebner(const std::vector<VecPoly>& gens);

// Generators of the syzygy module {a in R^s : sum a_i gens_i = 0}.
std::vector<VecPoly> module_syzygies(const std::vector<VecPoly>& gens);

// k-dimension of R^rank / <gb>; nullopt when infinite.
std::optional<uint64_t> module_colength(uint32_t rank,
                                        const std::vector<VecPoly>& gb,
                                        const RingPtr& ring);

// length of U/W for ideals W <= U whose quotient has finite length;
// precondition W subset of U is checked by membership.
std::optional<uint64_t> subquotient_length(const Ideal& U, const Ideal& W);

} // namespace vvlab
