#pragma once

#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "vvlab/linalg.hpp"
#include "vvlab/local_model.hpp"
#include "vvlab/vv.hpp"

namespace vvlab {

// Finite window of L = sum_n A/I^{n+1} with the action of u_i = x_i t as
// explicit matrices between levels.  Levels are built lazily and cached.
class LWindow {
public:
  LWindow(MPrimaryIdeal I, std::vector<Polynomial> seq, int n_max);

  const MPrimaryIdeal& ideal() const { return I_; }
  const ModelPtr& model() const { return I_.model(); }
  const std::vector<Polynomial>& seq() const { return seq_; }
  int n_max() const { return n_max_; }
  size_t seq_len() const { return seq_.size(); }

  size_t dim(int n) const; // 0 for n < 0
  const std::vector<Monomial>& basis(int n) const;
  // multiplication by seq[i]: L_n -> L_{n+1}
  const SparseMat& u_map(size_t i, int n) const;
  SparseMat u_power(size_t i, int n, int t) const; // L_n -> L_{n+t}
  // multiplication by the ring variable v: L_n -> L_n
  const SparseMat& var_map(size_t v, int n) const;

  // pairwise commutation of the u-actions across the window (invariant)
  void verify_commutation() const;
  // dim L_n = colength(I^{n+1}) across the window (invariant)
  void verify_dims() const;

private:
  struct Level {
    std::vector<Monomial> basis;
    std::unordered_map<Monomial, size_t, MonomialHash> index;
    Ideal power; // I^{n+1} + J
    std::vector<SparseMat> u;   // per sequence element, to level n+1
    std::vector<bool> u_built;
    std::vector<SparseMat> var; // per ring variable, to level n
    std::vector<bool> var_built;
  };
  Level& level(int n) const;
  SparseMat build_action(int n, const Polynomial& mult, int target) const;

  MPrimaryIdeal I_;
  std::vector<Polynomial> seq_;
  int n_max_;
  mutable std::mutex mu_;
  mutable std::vector<std::unique_ptr<Level>> levels_;
};

struct KoszulDegreeRecord {
  int n = 0;
  bool certified = false; // all participating levels fit in the window
  uint64_t h1_dim = 0;
  uint64_t vv_length = 0;
  bool dims_agree = false;
  bool ann_agree = false; // vacuously true for zero pieces
  std::string h1_ann;
};

struct KoszulCheckReport {
  std::vector<KoszulDegreeRecord> records;
  bool all_certified_agree = true;
  // side check: dim ker(u_1: L_n -> L_{n+1}) = 0 past the stabilization degree
  bool filter_regular_ok = true;
  int filter_checked_from = 0;
};

// Koszul H_1 of (u_1..u_r) on the window, degree by degree, compared against
// the VV report (dimensions and annihilators).
KoszulCheckReport koszul_h1_check(const VvModuleReport& vv, LWindow& win);

// dim of H_1 of the Koszul complex at degree n (independent of any VV data)
uint64_t koszul_h1_dim(LWindow& win, int n);

} // namespace vvlab
