#include "vvlab/linalg.hpp"

#include "vvlab/field.hpp"

namespace vvlab {

ModMatrix ModMatrix::identity(size_t n, uint64_t p) {
  ModMatrix m(n, n, p);
  for (size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

ModMatrix ModMatrix::mul(const ModMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw StructuralError("matrix shape mismatch");
  ModMatrix out(rows_, rhs.cols_, p_);
  for (size_t i = 0; i < rows_; ++i) {
    for (size_t k = 0; k < cols_; ++k) {
      uint64_t f = at(i, k);
      if (!f) continue;
      const uint32_t* src = rhs.row(k);
      uint32_t* dst = out.row(i);
      for (size_t j = 0; j < rhs.cols_; ++j)
        dst[j] = static_cast<uint32_t>((dst[j] + f * src[j]) % p_);
    }
  }
  return out;
}

std::vector<uint32_t> ModMatrix::apply(const std::vector<uint32_t>& v) const {
  if (v.size() != cols_) throw StructuralError("vector length mismatch");
  std::vector<uint32_t> out(rows_, 0);
  for (size_t i = 0; i < rows_; ++i) {
    uint64_t acc = 0;
    const uint32_t* r = row(i);
    for (size_t j = 0; j < cols_; ++j) {
      acc += static_cast<uint64_t>(r[j]) * v[j] % p_;
      if (acc >= (1ull << 62)) acc %= p_;
    }
    out[i] = static_cast<uint32_t>(acc % p_);
  }
  return out;
}

ModMatrix ModMatrix::hstack(const ModMatrix& a, const ModMatrix& b) {
  if (a.rows() != b.rows() || a.p() != b.p())
    throw StructuralError("hstack shape mismatch");
  ModMatrix out(a.rows(), a.cols() + b.cols(), a.p());
  for (size_t i = 0; i < a.rows(); ++i) {
    for (size_t j = 0; j < a.cols(); ++j) out.set(i, j, a.at(i, j));
    for (size_t j = 0; j < b.cols(); ++j) out.set(i, a.cols() + j, b.at(i, j));
  }
  return out;
}

namespace {

// forward elimination; returns pivot column per eliminated row
std::vector<size_t> echelonize(ModMatrix& m) {
  uint64_t p = m.p();
  std::vector<size_t> pivot_cols;
  size_t r = 0;
  for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    size_t sel = r;
    while (sel < m.rows() && m.at(sel, c) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != r)
      for (size_t j = c; j < m.cols(); ++j) {
        uint32_t tmp = m.at(r, j);
        m.set(r, j, m.at(sel, j));
        m.set(sel, j, tmp);
      }
    uint64_t inv = inv_mod(m.at(r, c), p);
    for (size_t j = c; j < m.cols(); ++j)
      m.set(r, j, mul_mod(m.at(r, j), inv, p));
    for (size_t i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      uint64_t f = m.at(i, c);
      if (!f) continue;
      uint64_t nf = p - f;
      const uint32_t* src = m.row(r);
      uint32_t* dst = m.row(i);
      for (size_t j = c; j < m.cols(); ++j)
        dst[j] = static_cast<uint32_t>((dst[j] + nf * src[j]) % p);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  return pivot_cols;
}

} // namespace

uint64_t matrix_rank(ModMatrix m) { return echelonize(m).size(); }

ModMatrix kernel_basis(const ModMatrix& m0) {
  ModMatrix m = m0;
  uint64_t p = m.p();
  std::vector<size_t> pivots = echelonize(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (size_t c : pivots) is_pivot[c] = true;
  size_t free_count = m.cols() - pivots.size();
  ModMatrix ker(m.cols(), free_count, p);
  size_t k = 0;
  for (size_t fc = 0; fc < m.cols(); ++fc) {
    if (is_pivot[fc]) continue;
    ker.set(fc, k, 1);
    // reduced echelon: pivot rows read off directly
    for (size_t r = 0; r < pivots.size(); ++r) {
      uint64_t v = m.at(r, fc);
      if (v) ker.set(pivots[r], k, p - v);
    }
    ++k;
  }
  return ker;
}

void RowSpace::reduce(std::vector<uint32_t>& v) const {
  for (size_t k = 0; k < rows_.size(); ++k) {
    uint64_t f = v[pivots_[k]];
    if (!f) continue;
    uint64_t nf = p_ - f;
    const std::vector<uint32_t>& r = rows_[k];
    for (size_t j = 0; j < width_; ++j)
      v[j] = static_cast<uint32_t>((v[j] + nf * r[j]) % p_);
  }
}

bool RowSpace::add(std::vector<uint32_t> v) {
  reduce(v);
  size_t piv = width_;
  for (size_t j = 0; j < width_; ++j)
    if (v[j]) {
      piv = j;
      break;
    }
  if (piv == width_) return false;
  uint64_t inv = inv_mod(v[piv], p_);
  for (size_t j = 0; j < width_; ++j)
    v[j] = static_cast<uint32_t>(v[j] * inv % p_);
  // keep earlier rows reduced against the new pivot
  for (size_t k = 0; k < rows_.size(); ++k) {
    uint64_t f = rows_[k][piv];
    if (!f) continue;
    uint64_t nf = p_ - f;
    for (size_t j = 0; j < width_; ++j)
      rows_[k][j] =
          static_cast<uint32_t>((rows_[k][j] + nf * v[j]) % p_);
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(piv);
  return true;
}

bool RowSpace::contains(std::vector<uint32_t> v) const {
  reduce(v);
  for (uint32_t x : v)
    if (x) return false;
  return true;
}

std::vector<uint32_t> SparseMat::apply(const std::vector<uint32_t>& v) const {
  if (v.size() != cols_) throw StructuralError("vector length mismatch");
  std::vector<uint32_t> out(rows_, 0);
  for (size_t c = 0; c < cols_; ++c) {
    uint64_t f = v[c];
    if (!f) continue;
    for (const auto& [r, val] : col_[c])
      out[r] = static_cast<uint32_t>((out[r] + f * val) % p_);
  }
  return out;
}

SparseMat SparseMat::compose(const SparseMat& inner) const {
  if (inner.rows_ != cols_) throw StructuralError("compose shape mismatch");
  SparseMat out(rows_, inner.cols_, p_);
  std::vector<uint64_t> acc(rows_, 0);
  for (size_t c = 0; c < inner.cols_; ++c) {
    std::fill(acc.begin(), acc.end(), 0);
    for (const auto& [mid, v1] : inner.col_[c])
      for (const auto& [r, v2] : col_[mid])
        acc[r] = (acc[r] + static_cast<uint64_t>(v1) * v2) % p_;
    for (size_t r = 0; r < rows_; ++r)
      if (acc[r]) out.add(r, c, acc[r]);
  }
  return out;
}

ModMatrix SparseMat::to_dense() const {
  ModMatrix out(rows_, cols_, p_);
  for (size_t c = 0; c < cols_; ++c)
    for (const auto& [r, v] : col_[c]) {
      uint64_t cur = out.at(r, c);
      out.set(r, c, (cur + v) % p_);
    }
  return out;
}

} // namespace vvlab
