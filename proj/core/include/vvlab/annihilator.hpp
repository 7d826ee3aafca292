#pragma once

#include <vector>

#include "vvlab/linalg.hpp"
#include "vvlab/local_model.hpp"

namespace vvlab {

// Annihilator in A of the subquotient Z/B of a finite-dimensional A-module
// given by matrices: var_actions[v] is the action of variable v on the
// ambient space, Z and B hold spanning columns with B <= Z and B stable under
// the action.  Computed degreewise: polynomials of degree <= D that map Z
// into B, extended by m^{D+1} once the whole degree-(D+1) layer annihilates.
Ideal subquotient_annihilator(const ModelPtr& A,
                              const std::vector<SparseMat>& var_actions,
                              const ModMatrix& Z, const ModMatrix& B,
                              int degree_cap);

// block-diagonal extension of per-level variable actions
SparseMat block_diag(const std::vector<const SparseMat*>& blocks);

} // namespace vvlab
