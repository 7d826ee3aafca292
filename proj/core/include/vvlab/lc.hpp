#pragma once

#include <string>
#include <vector>

#include "vvlab/lseries.hpp"

namespace vvlab {

struct LcConfig {
  int t_min = 1, t_max = 6;
  int stable_window = 2; // consecutive t values with identical (dim, ann)
  int n_scan_max = 6;    // scan range is [-dim A, n_scan_max]
};

enum class PieceStatus { Stable, Zero, Unstable };

const char* piece_status_str(PieceStatus s);

// Stabilized Koszul-colimit approximation of one graded piece of the i-th
// local cohomology of L.  Stability requires equal dimension and annihilator
// across the window and transition maps inducing isomorphisms.
struct CohomologyPieceEstimate {
  int i = 0, n = 0;
  PieceStatus status = PieceStatus::Unstable;
  uint64_t dim = 0;
  Ideal ann; // valid for stable pieces; unit for zero pieces
  int t_onset = 0;
  int window_width = 0;
  std::vector<uint64_t> dims_by_t;
};

CohomologyPieceEstimate cohomology_piece(int i, int n, LWindow& win,
                                         const LcConfig& cfg = {});

struct QEstimate {
  int i = 0;
  PieceStatus status = PieceStatus::Unstable;
  Ideal ideal; // intersection of stable piece annihilators; omitted if unstable
  MPrimaryVerdict verdict;
  int support_lo = 0, support_hi = 0; // scanned range
  int nonzero_lo = 0, nonzero_hi = 0; // observed nonzero support (when any)
  bool any_nonzero = false;
  std::vector<CohomologyPieceEstimate> pieces;
};

// q_i(I): contraction of the annihilator of H^i over the scanned support.
QEstimate q_estimate(int i, LWindow& win, const LcConfig& cfg = {});

struct QProductRow {
  uint64_t seed = 0;
  bool contained = false;
};

struct QProductCheck {
  bool applicable = false; // all q's stable
  std::string skip_reason;
  Ideal product;
  MPrimaryVerdict product_verdict;
  std::vector<QProductRow> rows;
  bool all_ok = false;
};

// Checks q_0 ... q_{r-1} <= ann V(x) for each sampled annihilator.
QProductCheck q_product_check(const std::vector<QEstimate>& qs,
                              const std::vector<std::pair<uint64_t, Ideal>>& anns,
                              const ModelPtr& A);

} // namespace vvlab
