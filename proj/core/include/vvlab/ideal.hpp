#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "vvlab/poly.hpp"

namespace vvlab {

// Handle to an ideal of F_p[x].  Immutable after construction; the reduced
// Groebner basis and derived data are cached once, behind a mutex, so handles
// are safe to share across threads.
class Ideal {
public:
  Ideal() = default;
  Ideal(RingPtr ring, std::vector<Polynomial> gens);

  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(RingPtr ring);
  static Ideal span(std::vector<Polynomial> gens); // ring taken from gens

  bool valid() const { return s_ != nullptr; }
  const RingPtr& ring() const;
  const std::vector<Polynomial>& gens() const;
  const std::vector<Polynomial>& basis() const; // reduced GB, cached
  std::vector<Monomial> lead_monomials() const;

  bool contains(const Polynomial& f) const;
  bool contains(const Ideal& other) const; // generator membership
  bool is_unit() const;
  bool is_zero_ideal() const;
  bool same_ideal(const Ideal& o) const; // reduced GB comparison

  // standard-monomial count modulo the lead-term ideal; nullopt = infinite
  std::optional<uint64_t> colength() const;
  // monomial basis of the quotient, sorted ascending; throws when infinite
  std::vector<Monomial> quotient_basis() const;
  int krull_dim() const; // of R/I

  std::string str() const; // canonical rendering of the reduced basis

private:
  struct State;
  std::shared_ptr<State> s_;
};

Polynomial normal_form(const Polynomial& f, const Ideal& I);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_sum(const Ideal& a, const std::vector<Polynomial>& extra);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_power(const Ideal& a, unsigned n);
Ideal ideal_intersect(const Ideal& a, const Ideal& b);
Ideal ideal_colon(const Ideal& a, const Polynomial& f);
Ideal ideal_colon(const Ideal& a, const Ideal& b);
Ideal ideal_saturate(const Ideal& a, const Ideal& b);
// generators of a that do not involve the given variables
Ideal ideal_eliminate(const Ideal& a, const std::vector<size_t>& vars);

} // namespace vvlab
