#pragma once

#include <string>
#include <vector>

#include "vvlab/local_model.hpp"

namespace vvlab {

// Presentation of the Rees algebra of I as k[x, T]/Q, where T_j maps to
// f_j t.  Q is computed by eliminating t from (T_j - f_j t) + J and verified
// by substitution.
struct ReesPresentation {
  ModelPtr A;
  RingPtr xt_ring; // x-variables first, then one T per generator of I
  size_t n_x = 0, n_t = 0;
  std::vector<Polynomial> matched_gens; // generator j of I corresponds to T_j
  Ideal rees_ideal;                     // Q, contains the image of J
  bool t_weights_graded = false; // generators are forms; enables resolutions
};

ReesPresentation rees_presentation(const MPrimaryIdeal& I);

// G = R(I)/I R(I) presented as xt_ring / g_ideal (x-variables kept).
struct GradedPresentation {
  ReesPresentation rees;
  Ideal g_ideal; // Q + (f_1..f_s)
};

// Builds G and verifies dim_k G_n = colength(I^{n+1}) - colength(I^n) for
// T-degrees n <= hilbert_check_bound.
GradedPresentation assoc_graded_presentation(const MPrimaryIdeal& I,
                                             unsigned hilbert_check_bound = 4);

// k-dimension of the T-degree-n piece of G, from the presentation alone.
uint64_t graded_piece_dim(const GradedPresentation& G, unsigned n);

struct InitialForm {
  Polynomial source;         // element of A (in the x-ring)
  unsigned order = 0;        // largest v with source in I^v
  Polynomial representative; // class in the G presentation, T-degree = order
};

InitialForm initial_form(const Polynomial& a, const MPrimaryIdeal& I,
                         const GradedPresentation& G);

// T-linear representative sum(c_j T_j) of an exact combination of I's
// generators (order-1 elements produced by superficial sampling).
Polynomial combination_form(const GradedPresentation& G,
                            const std::vector<uint64_t>& coeffs);

struct RegularityCertificate {
  bool regular = false;
  std::vector<std::string> colon_steps; // one rendered colon per step
  std::string witness;                  // element of (E : theta) \ E on failure
};

// Decides whether the given order-1 classes form a regular sequence on G by
// exact colon computations ((prior) : theta_i) = (prior) in the presentation.
RegularityCertificate is_g_regular_sequence(const std::vector<Polynomial>& reps,
                                            const GradedPresentation& G);

} // namespace vvlab
