#include "vvlab/ring.hpp"

#include "vvlab/errors.hpp"
#include "vvlab/field.hpp"

namespace vvlab {

RingPtr make_ring(uint64_t p, std::vector<std::string> var_names,
                  std::vector<int64_t> weights, MonomialOrder order) {
  if (!is_prime(p)) throw StructuralError("characteristic must be prime");
  if (weights.empty()) weights.assign(var_names.size(), 1);
  if (weights.size() != var_names.size())
    throw StructuralError("weight count does not match variable count");
  for (int64_t w : weights)
    if (w <= 0) throw StructuralError("variable weights must be positive");
  auto r = std::make_shared<PolyRing>();
  r->p = p;
  r->var_names = std::move(var_names);
  r->weights = std::move(weights);
  r->order = order;
  return r;
}

RingPtr extend_front(const RingPtr& ring, const std::vector<std::string>& fresh,
                     const std::vector<int64_t>& fresh_weights) {
  std::vector<std::string> names = fresh;
  names.insert(names.end(), ring->var_names.begin(), ring->var_names.end());
  std::vector<int64_t> w = fresh_weights.empty()
                               ? std::vector<int64_t>(fresh.size(), 1)
                               : fresh_weights;
  w.insert(w.end(), ring->weights.begin(), ring->weights.end());
  MonomialOrder ord;
  ord.block_split = static_cast<int>(fresh.size());
  return make_ring(ring->p, std::move(names), std::move(w), ord);
}

RingPtr extend_back(const RingPtr& ring, const std::vector<std::string>& fresh,
                    const std::vector<int64_t>& fresh_weights) {
  std::vector<std::string> names = ring->var_names;
  names.insert(names.end(), fresh.begin(), fresh.end());
  std::vector<int64_t> w = ring->weights;
  if (fresh_weights.empty())
    w.insert(w.end(), fresh.size(), 1);
  else
    w.insert(w.end(), fresh_weights.begin(), fresh_weights.end());
  return make_ring(ring->p, std::move(names), std::move(w), MonomialOrder{});
}

} // namespace vvlab
