#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "vvlab/module.hpp"

namespace vvlab {

struct BettiTable {
  // (homological degree, internal weighted degree) -> count
  std::map<std::pair<int, int64_t>, uint64_t> entries;
  int projective_dimension = 0;

  std::vector<uint64_t> totals() const; // index = homological degree
  std::string str() const;
};

// Presentation of coker(phi: F1 -> F0); columns are the images of the F1
// basis, row_degrees the weighted-degree shifts of F0.
struct FreePresentation {
  RingPtr ring;
  std::vector<int64_t> row_degrees;
  std::vector<VecPoly> columns;
};

FreePresentation cyclic_presentation(const Ideal& relations);

// Minimal graded Betti numbers and projective dimension over the ambient
// polynomial ring.  Input must be homogeneous for the ring weights.
BettiTable min_free_resolution(const FreePresentation& pres);

// weighted degree of a homogeneous column (throws on inhomogeneous input)
int64_t column_degree(const VecPoly& col, const std::vector<int64_t>& row_degrees);

} // namespace vvlab
