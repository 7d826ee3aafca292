#pragma once

#include <string>
#include <vector>

#include "vvlab/blowup.hpp"
#include "vvlab/superficial.hpp"

namespace vvlab {

struct VvConfig {
  int zero_window = 3; // consecutive zero pieces that close the module
  // floor: n >= N + r; hard cap: n <= 3N + 10
};

struct VvPiece {
  int n = 0;
  uint64_t length = 0;
  std::string u_presentation; // I^{n+1} cap (x), rendered
  std::string w_presentation; // x I^n, rendered
  Ideal ann;                  // (W_n : U_n)
  MPrimaryVerdict ann_verdict;
};

struct VvModuleReport {
  SuperficialSequence seq;
  std::vector<VvPiece> pieces; // n = 1..top computed degree
  bool stabilized = false;
  int stabilization_degree = 0; // first n with a vanishing tail
  uint64_t total_length = 0;
  Ideal annihilator; // intersection over nonzero pieces; unit if none
  MPrimaryVerdict ann_verdict;
};

// Exact graded pieces (I^{n+1} cap (x)) / (x I^n) until a vanishing window
// holds; per-piece annihilators are verified unit-or-m-primary (support at m).
// For length-one sequences with x a nonzerodivisor the pieces are computed
// through the identity I^{n+1} cap (x) = x (I^{n+1} : x).
VvModuleReport vv_module(const SuperficialSequence& seq, const MPrimaryIdeal& I,
                         const VvConfig& cfg = {}, const LadderPtr& base = nullptr);

// annihilator of a stabilized report; throws UnstableError otherwise
Ideal vv_annihilator(const VvModuleReport& report);

struct DepthCertificate {
  int value = -1;
  std::string strategy;
  int vv_value = -1;
  int resolution_value = -1;
  std::vector<std::string> notes;
};

enum class DepthStrategy { Vv, Resolution, Both };

// depth of the associated graded ring, by vanishing of the sampled VV module
// (largest r with V = 0) and/or projective dimension of the G presentation.
DepthCertificate depth_assoc_graded(const MPrimaryIdeal& I, DepthStrategy strategy,
                                    uint64_t seed,
                                    const SuperficialConfig& scfg = {},
                                    const VvConfig& vcfg = {});

} // namespace vvlab
