#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "vvlab/monomial.hpp"

namespace vvlab {

// Monomials outside the monomial ideal generated by `leads`.  nullopt when
// the set is infinite (some variable has no pure power in the ideal).
std::optional<std::vector<Monomial>> standard_monomials(
    const std::vector<Monomial>& leads, size_t nvars);

// Count of standard monomials of each total degree 0..max_degree.
std::vector<uint64_t> standard_monomial_counts(const std::vector<Monomial>& leads,
                                               size_t nvars, uint64_t max_degree);

// All standard monomials of exact total degree d.
std::vector<Monomial> standard_monomials_of_degree(
    const std::vector<Monomial>& leads, size_t nvars, uint64_t d);

// Krull dimension of k[x]/(leads) via independent variable subsets;
// -1 when the ideal is the unit ideal.
int monomial_krull_dim(const std::vector<Monomial>& leads, size_t nvars);

} // namespace vvlab
