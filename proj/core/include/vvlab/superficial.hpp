#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "vvlab/local_model.hpp"

namespace vvlab {

struct SuperficialConfig {
  int resample_cap = 64;
  int tail_min = 4; // minimum length of the verified equality tail
};

// Lazily grown ladder I^n + J, shared across samples of the same ideal.
class SharedLadder {
public:
  explicit SharedLadder(MPrimaryIdeal I) : I_(std::move(I)) {}
  const MPrimaryIdeal& ideal() const { return I_; }
  Ideal at(unsigned n);

private:
  MPrimaryIdeal I_;
  std::mutex mu_;
  std::vector<Ideal> steps_;
};

using LadderPtr = std::shared_ptr<SharedLadder>;

struct SuperficialCertificate {
  bool ok = false;
  int n_max = 0; // window: degrees 1..n_max were checked
  int onset = 0; // first n from which equality held through n_max
  int c_used = 0; // 0 for the plain colon form, else the c of the intersection form
  std::string failure; // offending colon ideals when verification failed
};

struct SuperficialCandidate {
  Polynomial element;           // combination of I's generators
  std::vector<uint64_t> coeffs; // over I's generators, in sampling order
  SuperficialCertificate cert;
  uint64_t seed = 0;
  // colon ladder (I^{n+1} + E : x) from verification, reusable by the
  // VV computation when the sequence has length one
  std::shared_ptr<std::vector<Ideal>> colons;
};

struct SuperficialSequence {
  std::vector<SuperficialCandidate> steps;
  uint64_t seed = 0;
  bool cm_warning = false; // sampled over a non-Cohen-Macaulay model

  std::vector<Polynomial> elements() const {
    std::vector<Polynomial> out;
    for (const auto& s : steps) out.push_back(s.element);
    return out;
  }
  std::string str() const;
};

// ladder[n] = I^n + (extra) + J for n = 0..top, built incrementally; an
// extra-free base ladder is reused when provided
std::vector<Ideal> power_ladder(const MPrimaryIdeal& I, unsigned top,
                                const std::vector<Polynomial>& extra,
                                const LadderPtr& base = nullptr);

struct VerifyOutcome {
  SuperficialCertificate cert;
  std::shared_ptr<std::vector<Ideal>> colons; // (I^{n+1} + E : x), index n
};

// Checks (I^{n+1} : x) = I^n on a tail of [1, n_max] with n_max = 2N + 6,
// modulo the extra relations (earlier sequence steps pushed into the ring).
// Falls back to the intersection form with I^c for c in [1, N].
SuperficialCertificate verify_superficial(const Polynomial& x,
                                          const MPrimaryIdeal& I,
                                          const std::vector<Polynomial>& extra,
                                          const SuperficialConfig& cfg);
VerifyOutcome verify_superficial_full(const Polynomial& x,
                                      const MPrimaryIdeal& I,
                                      const std::vector<Polynomial>& extra,
                                      const SuperficialConfig& cfg,
                                      const LadderPtr& base = nullptr);

// r random combinations of I's generators, step i verified in
// A/(x_1..x_{i-1}); deterministic in (I, r, seed).
SuperficialSequence sample_superficial_sequence(const MPrimaryIdeal& I,
                                                unsigned r, uint64_t seed,
                                                const SuperficialConfig& cfg = {},
                                                const LadderPtr& base = nullptr);

// (J : x) = J in the model; certifies that x is a nonzerodivisor on A
bool is_nonzerodivisor(const ModelPtr& A, const Polynomial& x);

} // namespace vvlab
