#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vvlab/ring.hpp"

namespace vvlab {

struct Term {
  Monomial mon;
  uint64_t coeff = 0; // in [1, p) for stored terms
  bool operator==(const Term&) const = default;
};

// Exact multivariate polynomial over F_p.  Terms are kept sorted in strictly
// descending monomial order with nonzero coefficients; the leading term is
// terms().front().
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  Polynomial(RingPtr ring, std::vector<Term> raw_terms);

  static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
  static Polynomial constant(RingPtr ring, uint64_t c);
  static Polynomial variable(RingPtr ring, size_t var, Exp power = 1);
  static Polynomial monomial(RingPtr ring, Monomial m, uint64_t c = 1);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mon.is_one());
  }
  const Term& lead() const;
  size_t size() const { return terms_.size(); }

  // total degree of the largest term (0 for the zero polynomial)
  uint64_t total_degree() const;
  // homogeneity with respect to the ring weights
  bool is_weighted_homogeneous() const;
  uint64_t weighted_degree() const; // of the leading term

  Polynomial monic() const;

  bool operator==(const Polynomial& o) const {
    return terms_ == o.terms_;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;
  Polynomial scaled(uint64_t c) const;           // c * this
  Polynomial times_term(const Term& t) const;    // t * this
  Polynomial sub_term_mul(const Term& t, const Polynomial& g) const; // this - t*g

  std::string str() const; // deterministic rendering, terms in descending order

private:
  void normalize();

  RingPtr ring_;
  std::vector<Term> terms_;
};

void require_same_ring(const Polynomial& a, const Polynomial& b);
void require_same_ring(const RingPtr& a, const RingPtr& b);

// Maps a polynomial into another ring of the same characteristic;
// var_map[i] is the target index of source variable i.
Polynomial map_poly(const Polynomial& f, const RingPtr& target,
                    const std::vector<size_t>& var_map);

std::string render_poly_list(const std::vector<Polynomial>& v,
                             const char* sep = "; ");

} // namespace vvlab
