#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "vvlab/monomial.hpp"

namespace vvlab {

// Immutable descriptor of a polynomial ring F_p[x_1..x_n] with positive
// variable weights and a fixed monomial order.  Ring identity is pointer
// identity: every object carries a shared_ptr to the ring it lives in, and
// mixing rings is a structural error.
struct PolyRing {
  uint64_t p = 0;
  std::vector<std::string> var_names;
  std::vector<int64_t> weights; // positive, one per variable
  MonomialOrder order;

  size_t nvars() const { return var_names.size(); }
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(uint64_t p, std::vector<std::string> var_names,
                  std::vector<int64_t> weights = {}, MonomialOrder order = {});

// New ring with extra variables prepended and an elimination block covering
// them (plus any existing block of the source order).
RingPtr extend_front(const RingPtr& ring, const std::vector<std::string>& fresh,
                     const std::vector<int64_t>& fresh_weights = {});

// New ring with extra variables appended; order stays plain degrevlex.
RingPtr extend_back(const RingPtr& ring, const std::vector<std::string>& fresh,
                    const std::vector<int64_t>& fresh_weights = {});

} // namespace vvlab
