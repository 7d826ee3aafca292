#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vvlab/lc.hpp"
#include "vvlab/vv.hpp"

namespace vvlab {

struct ArConfig {
  int samples = 32;      // sample budget
  int stable_window = 8; // consecutive non-shrinking samples that stop the run
  bool parallel = true;
};

struct ArTraceEntry {
  int index = 0;
  uint64_t seed = 0;
  std::string fingerprint; // of the running intersection after this sample
  bool shrank = false;
};

// Monte-Carlo over-approximation of a_r(I): the intersection of ann V over
// sampled superficial sequences contains the full intersection.
struct ArEstimate {
  int r = 0;
  uint64_t seed = 0;
  int samples_used = 0;
  int budget = 0;
  std::vector<ArTraceEntry> trace;
  Ideal final_ideal;
  MPrimaryVerdict verdict;
  int stabilization_index = -1; // first sample index of the non-shrinking window
  std::optional<int> depth_g;   // when known; >= r predicts the unit ideal
  bool depth_warning = false;
  std::vector<std::pair<uint64_t, Ideal>> sample_anns;
};

ArEstimate ar_estimate(const MPrimaryIdeal& I, int r, uint64_t seed,
                       const ArConfig& cfg = {}, const SuperficialConfig& scfg = {},
                       const VvConfig& vcfg = {},
                       std::optional<int> depth_hint = std::nullopt);

struct PowersConfig {
  int l_max = 3;
  ArConfig ar{.samples = 8, .stable_window = 4, .parallel = true};
  // powers of the declared ideals grow fast; the scan keeps its own smaller
  // cohomology window (nonzero support sits in low degrees)
  LcConfig lc{.t_min = 1, .t_max = 4, .stable_window = 2, .n_scan_max = 2};
  bool with_q = true; // q_i(I^l) estimates and Veronese verdicts
};

struct PowersEntry {
  int l = 1;
  bool ok = false;
  std::string error; // per-l failures isolate here
  ArEstimate ar;
  std::vector<QEstimate> qs;       // i = 0..r-1
  std::vector<int> veronese_ok;    // per i: 1 ok, 0 fail, -1 skipped
  Ideal running_intersection;      // over l' <= l
  MPrimaryVerdict running_verdict;
  int running_contains_qprod = -1; // vs q-product of the base ideal
  int ar_equal_prev = -1;          // tail-constancy probe
};

struct PowersScanReport {
  int r = 0;
  int l_max = 0;
  uint64_t seed = 0;
  std::vector<PowersEntry> entries;
  bool tail_constant = false; // last two a_r(I^l) agree
  // unique-maximal-element probe for the family {q_i(I^l)}_l, per i
  std::vector<std::string> q_max_probe;
};

PowersScanReport powers_scan(const MPrimaryIdeal& I, int r, uint64_t seed,
                             const PowersConfig& cfg = {},
                             const SuperficialConfig& scfg = {},
                             const VvConfig& vcfg = {});

// maximal superficial sequence reused for L-window constructions
LWindow make_window(const MPrimaryIdeal& I, uint64_t seed, int n_top,
                    const SuperficialConfig& scfg = {});

std::string ideal_fingerprint(const Ideal& I);

} // namespace vvlab
