#include "vvlab/resolution.hpp"

#include <algorithm>
#include <sstream>

#include "vvlab/errors.hpp"

namespace vvlab {

std::vector<uint64_t> BettiTable::totals() const {
  std::vector<uint64_t> t(static_cast<size_t>(projective_dimension) + 1, 0);
  for (const auto& [key, count] : entries) {
    size_t h = static_cast<size_t>(key.first);
    if (h >= t.size()) t.resize(h + 1, 0);
    t[h] += count;
  }
  return t;
}

std::string BettiTable::str() const {
  std::ostringstream os;
  os << "pd=" << projective_dimension << " totals=";
  auto t = totals();
  for (size_t i = 0; i < t.size(); ++i) {
    if (i) os << ",";
    os << t[i];
  }
  return os.str();
}

int64_t column_degree(const VecPoly& col,
                      const std::vector<int64_t>& row_degrees) {
  if (col.is_zero()) throw InternalError("degree of zero column");
  const RingPtr& ring = col.ring();
  bool have = false;
  int64_t deg = 0;
  for (const ModTerm& t : col.terms()) {
    int64_t d = static_cast<int64_t>(weighted_degree(t.mon, ring->weights)) +
                row_degrees[t.comp];
    if (!have) {
      deg = d;
      have = true;
    } else if (d != deg) {
      throw UnsupportedError(
          "resolution input is not homogeneous for the ring weights");
    }
  }
  return deg;
}

FreePresentation cyclic_presentation(const Ideal& relations) {
  FreePresentation pres;
  pres.ring = relations.ring();
  pres.row_degrees = {0};
  for (const Polynomial& g : relations.basis())
    pres.columns.push_back(VecPoly::from_poly(g, 1, 0));
  return pres;
}

namespace {

// greedy removal of columns lying in the span of the others; for homogeneous
// input the survivors are a minimal generating set (graded Nakayama)
std::vector<VecPoly> minimal_generators(std::vector<VecPoly> cols,
                                        const std::vector<int64_t>& row_degrees) {
  std::vector<VecPoly> live;
  for (VecPoly& c : cols)
    if (!c.is_zero()) live.push_back(std::move(c));
  std::sort(live.begin(), live.end(), [&](const VecPoly& a, const VecPoly& b) {
    return column_degree(a, row_degrees) < column_degree(b, row_degrees);
  });
  size_t i = 0;
  while (i < live.size()) {
    std::vector<VecPoly> others;
    others.reserve(live.size() - 1);
    for (size_t j = 0; j < live.size(); ++j)
      if (j != i) others.push_back(live[j]);
    std::vector<VecPoly> gb = module_groebner(others);
    if (module_normal_form(live[i], gb).is_zero())
      live.erase(live.begin() + static_cast<long>(i));
    else
      ++i;
  }
  return live;
}

bool has_unit_entry(const VecPoly& col) {
  for (const ModTerm& t : col.terms())
    if (t.mon.is_one()) return true;
  return false;
}

} // namespace

BettiTable min_free_resolution(const FreePresentation& pres) {
  if (!pres.ring) throw StructuralError("presentation without ring");
  BettiTable table;
  for (int64_t d : pres.row_degrees) table.entries[{0, d}] += 1;
  table.projective_dimension = 0;

  std::vector<int64_t> row_degrees = pres.row_degrees;
  std::vector<VecPoly> cols;
  for (const VecPoly& c : pres.columns) {
    if (c.is_zero()) continue;
    column_degree(c, row_degrees); // homogeneity check
    cols.push_back(c);
  }

  int h = 1;
  size_t guard = pres.ring->nvars() + 3;
  while (!cols.empty()) {
    cols = minimal_generators(std::move(cols), row_degrees);
    if (cols.empty()) break;
    if (h > 1)
      for (const VecPoly& c : cols)
        if (has_unit_entry(c))
          throw InternalError("unit entry in a syzygy of minimal generators");
    std::vector<int64_t> next_degrees;
    for (const VecPoly& c : cols) {
      int64_t d = column_degree(c, row_degrees);
      table.entries[{h, d}] += 1;
      next_degrees.push_back(d);
    }
    table.projective_dimension = h;
    if (static_cast<size_t>(h) > guard)
      throw InternalError("resolution exceeded the Hilbert bound");
    cols = module_syzygies(cols);
    row_degrees = std::move(next_degrees);
    ++h;
  }
  return table;
}

} // namespace vvlab
