#pragma once

#include <vector>

#include "vvlab/poly.hpp"

namespace vvlab {

// Fully reduced normal form of f against basis (every term of the result is
// irreducible).  The basis need not be a Groebner basis; the result then
// depends on basis order, which is why bases are kept canonically sorted.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

// Unique reduced Groebner basis for the ring's monomial order.  Buchberger
// with the Gebauer-Moeller pair update; the unit ideal comes back as {1}.
std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& gens);

struct LiftedBasis {
  std::vector<Polynomial> basis;
  // rep[k][i]: coefficient of input generator i in basis element k
  std::vector<std::vector<Polynomial>> rep;
};

// Groebner basis with a transformation matrix over the input generators.
LiftedBasis groebner_with_lift(const std::vector<Polynomial>& gens);

// Writes f as sum(coeffs[i] * gens[i]); requires f to lie in the ideal.
std::vector<Polynomial> lift_membership(const Polynomial& f,
                                        const std::vector<Polynomial>& gens);

// Exact division by a single polynomial; throws unless g divides f.
Polynomial exact_divide(const Polynomial& f, const Polynomial& g);

} // namespace vvlab
