#pragma once

#include <cstdint>
#include <vector>

#include "vvlab/errors.hpp"

namespace vvlab {

// Dense matrix over F_p, row-major uint32 storage, arithmetic in uint64.
class ModMatrix {
public:
  ModMatrix() = default;
  ModMatrix(size_t rows, size_t cols, uint64_t p)
      : rows_(rows), cols_(cols), p_(p), a_(rows * cols, 0) {}

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  uint64_t p() const { return p_; }

  uint32_t at(size_t r, size_t c) const { return a_[r * cols_ + c]; }
  void set(size_t r, size_t c, uint64_t v) {
    a_[r * cols_ + c] = static_cast<uint32_t>(v % p_);
  }
  uint32_t* row(size_t r) { return a_.data() + r * cols_; }
  const uint32_t* row(size_t r) const { return a_.data() + r * cols_; }

  static ModMatrix identity(size_t n, uint64_t p);
  ModMatrix mul(const ModMatrix& rhs) const;
  std::vector<uint32_t> apply(const std::vector<uint32_t>& v) const;
  // columns of `extra` appended on the right
  static ModMatrix hstack(const ModMatrix& a, const ModMatrix& b);

private:
  size_t rows_ = 0, cols_ = 0;
  uint64_t p_ = 2;
  std::vector<uint32_t> a_;
};

uint64_t matrix_rank(ModMatrix m); // destroys its copy
// columns form a basis of {x : M x = 0}
ModMatrix kernel_basis(const ModMatrix& m);

// Incremental row space over F_p; supports membership and canonical residuals.
class RowSpace {
public:
  explicit RowSpace(size_t width, uint64_t p) : width_(width), p_(p) {}

  // reduces v against the current echelon rows (in place)
  void reduce(std::vector<uint32_t>& v) const;
  // reduce, then absorb a nonzero residual; returns true when rank grew
  bool add(std::vector<uint32_t> v);
  bool contains(std::vector<uint32_t> v) const;
  size_t rank() const { return rows_.size(); }
  size_t width() const { return width_; }

private:
  size_t width_;
  uint64_t p_;
  std::vector<std::vector<uint32_t>> rows_; // echelon, normalized pivots
  std::vector<size_t> pivots_;
};

// Column-sparse matrix over F_p; used for multiplication actions where most
// entries vanish.
class SparseMat {
public:
  SparseMat() = default;
  SparseMat(size_t rows, size_t cols, uint64_t p)
      : rows_(rows), cols_(cols), p_(p), col_(cols) {}

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  uint64_t p() const { return p_; }

  void add(size_t r, size_t c, uint64_t v) {
    v %= p_;
    if (v) col_[c].push_back({static_cast<uint32_t>(r), static_cast<uint32_t>(v)});
  }
  const std::vector<std::pair<uint32_t, uint32_t>>& column(size_t c) const {
    return col_[c];
  }

  std::vector<uint32_t> apply(const std::vector<uint32_t>& v) const;
  SparseMat compose(const SparseMat& inner) const; // this * inner
  ModMatrix to_dense() const;

private:
  size_t rows_ = 0, cols_ = 0;
  uint64_t p_ = 2;
  std::vector<std::vector<std::pair<uint32_t, uint32_t>>> col_;
};

} // namespace vvlab
