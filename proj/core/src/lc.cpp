#include "vvlab/lc.hpp"

#include <algorithm>

#include "vvlab/annihilator.hpp"
#include "vvlab/errors.hpp"

namespace vvlab {

const char* piece_status_str(PieceStatus s) {
  switch (s) {
  case PieceStatus::Stable:
    return "stable";
  case PieceStatus::Zero:
    return "zero";
  default:
    return "unstable";
  }
}

namespace {

std::vector<std::vector<size_t>> subsets_of_size(size_t d, size_t p) {
  std::vector<std::vector<size_t>> out;
  std::vector<size_t> cur;
  std::function<void(size_t)> rec = [&](size_t start) {
    if (cur.size() == p) {
      out.push_back(cur);
      return;
    }
    for (size_t v = start; v < d; ++v) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

// u_j^t as a map L_level -> L_{level+t}; empty shapes for vanishing sources
SparseMat upower_or_empty(LWindow& win, size_t j, int level, int t) {
  size_t src = win.dim(level);
  size_t dst = win.dim(level + t);
  if (src == 0 || dst == 0) return SparseMat(dst, src, win.model()->p());
  return win.u_power(j, level, t);
}

// cochain differential d^p: K^p -> K^{p+1} at internal degree n, Koszul power t
ModMatrix cochain_matrix(LWindow& win, int p_hom, int n, int t) {
  size_t d = win.seq_len();
  uint64_t p = win.model()->p();
  auto src_sets = subsets_of_size(d, static_cast<size_t>(p_hom));
  auto dst_sets = subsets_of_size(d, static_cast<size_t>(p_hom) + 1);
  int src_level = n + t * p_hom;
  size_t sdim = win.dim(src_level);
  size_t ddim = win.dim(src_level + t);
  ModMatrix out(dst_sets.size() * ddim, src_sets.size() * sdim, p);
  if (sdim == 0 || ddim == 0) return out;

  auto dst_index = [&](const std::vector<size_t>& s) -> size_t {
    for (size_t k = 0; k < dst_sets.size(); ++k)
      if (dst_sets[k] == s) return k;
    throw InternalError("subset bookkeeping failure");
  };

  for (size_t a = 0; a < src_sets.size(); ++a) {
    const auto& S = src_sets[a];
    for (size_t j = 0; j < d; ++j) {
      if (std::find(S.begin(), S.end(), j) != S.end()) continue;
      std::vector<size_t> T = S;
      T.insert(std::upper_bound(T.begin(), T.end(), j), j);
      size_t b = dst_index(T);
      size_t pos = 0;
      while (S.size() > pos && S[pos] < j) ++pos;
      bool negative = (pos % 2) == 1;
      SparseMat u = upower_or_empty(win, j, src_level, t);
      for (size_t c = 0; c < sdim; ++c)
        for (const auto& [row, v] : u.column(c)) {
          uint64_t cur = out.at(b * ddim + row, a * sdim + c);
          uint64_t add = negative ? p - v : v;
          out.set(b * ddim + row, a * sdim + c, (cur + add) % p);
        }
    }
  }
  return out;
}

// transition K^p(t) -> K^p(t+1): on block S multiply by prod_{j in S} u_j
ModMatrix transition_matrix(LWindow& win, int p_hom, int n, int t) {
  size_t d = win.seq_len();
  uint64_t p = win.model()->p();
  auto sets = subsets_of_size(d, static_cast<size_t>(p_hom));
  int src_level = n + t * p_hom;
  int dst_level = n + (t + 1) * p_hom;
  size_t sdim = win.dim(src_level);
  size_t ddim = win.dim(dst_level);
  ModMatrix out(sets.size() * ddim, sets.size() * sdim, p);
  if (sdim == 0) return out;
  for (size_t a = 0; a < sets.size(); ++a) {
    if (p_hom == 0) {
      for (size_t c = 0; c < sdim; ++c) out.set(a * ddim + c, a * sdim + c, 1);
      continue;
    }
    // ascending composition of the u_j, j in S
    SparseMat acc(win.dim(src_level), win.dim(src_level), p);
    bool first = true;
    int level = src_level;
    for (size_t j : sets[a]) {
      SparseMat step = upower_or_empty(win, j, level, 1);
      acc = first ? step : step.compose(acc);
      first = false;
      ++level;
    }
    if (first) continue;
    for (size_t c = 0; c < sdim; ++c)
      for (const auto& [row, v] : acc.column(c))
        out.set(a * ddim + row, a * sdim + c, v);
  }
  return out;
}

struct PieceData {
  uint64_t dim = 0;
  ModMatrix Z;
  ModMatrix B;
  Ideal ann;
};

PieceData piece_at_t(LWindow& win, int i, int n, int t) {
  PieceData out;
  ModMatrix di = cochain_matrix(win, i, n, t);
  out.Z = kernel_basis(di);
  if (i > 0) {
    out.B = cochain_matrix(win, i - 1, n, t);
  } else {
    out.B = ModMatrix(out.Z.rows(), 0, win.model()->p());
  }
  uint64_t rank_b = out.B.cols() ? matrix_rank(out.B) : 0;
  out.dim = out.Z.cols() - rank_b;

  if (out.dim > 0) {
    const ModelPtr& A = win.model();
    int level = n + t * i;
    size_t blocks = subsets_of_size(win.seq_len(), static_cast<size_t>(i)).size();
    std::vector<SparseMat> var_actions;
    for (size_t v = 0; v < A->nvars(); ++v) {
      std::vector<const SparseMat*> parts;
      for (size_t b = 0; b < blocks; ++b) parts.push_back(&win.var_map(v, level));
      var_actions.push_back(block_diag(parts));
    }
    int cap = win.ideal().adic_bound() * (level + 2) + 2;
    out.ann = subquotient_annihilator(A, var_actions, out.Z, out.B, cap);
  } else {
    out.ann = Ideal::unit(win.model()->ring());
  }
  return out;
}

// image of H_t in H_{t+1} under the transition map must have full dimension
bool transition_iso(LWindow& win, int i, int n, int t, const PieceData& cur,
                    const PieceData& next) {
  if (cur.dim != next.dim) return false;
  if (cur.dim == 0) return true;
  ModMatrix phi = transition_matrix(win, i, n, t);
  ModMatrix phiZ(phi.rows(), cur.Z.cols(), phi.p());
  for (size_t c = 0; c < cur.Z.cols(); ++c) {
    std::vector<uint32_t> col(cur.Z.rows());
    for (size_t r = 0; r < cur.Z.rows(); ++r) col[r] = cur.Z.at(r, c);
    std::vector<uint32_t> img = phi.apply(col);
    for (size_t r = 0; r < img.size(); ++r) phiZ.set(r, c, img[r]);
  }
  uint64_t rank_b = next.B.cols() ? matrix_rank(next.B) : 0;
  uint64_t rank_join = matrix_rank(ModMatrix::hstack(phiZ, next.B));
  return rank_join - rank_b == cur.dim;
}

} // namespace

CohomologyPieceEstimate cohomology_piece(int i, int n, LWindow& win,
                                         const LcConfig& cfg) {
  if (i < 0 || static_cast<size_t>(i) >= win.seq_len())
    throw PreconditionError("cohomological index out of range [0, d-1]");
  CohomologyPieceEstimate est;
  est.i = i;
  est.n = n;

  std::vector<PieceData> data;
  std::vector<int> ts;
  int agree_run = 1;
  for (int t = cfg.t_min; t <= cfg.t_max; ++t) {
    // window capacity: the target level of d^i must fit
    if (n + t * (i + 1) > win.n_max()) break;
    PieceData cur = piece_at_t(win, i, n, t);
    est.dims_by_t.push_back(cur.dim);
    if (!data.empty()) {
      const PieceData& prev = data.back();
      bool same = prev.dim == cur.dim && prev.ann.same_ideal(cur.ann) &&
                  transition_iso(win, i, n, ts.back(), prev, cur);
      agree_run = same ? agree_run + 1 : 1;
    }
    data.push_back(std::move(cur));
    ts.push_back(t);
    if (agree_run >= cfg.stable_window) {
      const PieceData& fin = data.back();
      est.status = fin.dim == 0 ? PieceStatus::Zero : PieceStatus::Stable;
      est.dim = fin.dim;
      est.ann = fin.ann;
      est.t_onset = ts[ts.size() - static_cast<size_t>(agree_run)];
      est.window_width = agree_run;
      return est;
    }
  }
  est.status = PieceStatus::Unstable; // window exhausted, no fabricated value
  return est;
}

QEstimate q_estimate(int i, LWindow& win, const LcConfig& cfg) {
  QEstimate q;
  q.i = i;
  const ModelPtr& A = win.model();
  q.support_lo = -static_cast<int>(win.seq_len());
  q.support_hi = cfg.n_scan_max;

  bool unstable = false;
  std::vector<Ideal> anns;
  for (int n = q.support_lo; n <= q.support_hi; ++n) {
    CohomologyPieceEstimate est = cohomology_piece(i, n, win, cfg);
    if (est.status == PieceStatus::Unstable) unstable = true;
    if (est.status == PieceStatus::Stable) {
      anns.push_back(est.ann);
      if (!q.any_nonzero) {
        q.nonzero_lo = n;
        q.any_nonzero = true;
      }
      q.nonzero_hi = n;
    }
    q.pieces.push_back(std::move(est));
  }
  if (unstable) {
    q.status = PieceStatus::Unstable; // ideal omitted
    return q;
  }
  if (anns.empty()) {
    q.status = PieceStatus::Zero;
    q.ideal = Ideal::unit(A->ring());
  } else {
    Ideal acc = anns.front();
    for (size_t k = 1; k < anns.size(); ++k) acc = ideal_intersect(acc, anns[k]);
    q.status = PieceStatus::Stable;
    q.ideal = acc;
  }
  q.verdict = classify_m_primary(A, q.ideal);
  return q;
}

QProductCheck q_product_check(const std::vector<QEstimate>& qs,
                              const std::vector<std::pair<uint64_t, Ideal>>& anns,
                              const ModelPtr& A) {
  QProductCheck out;
  for (const QEstimate& q : qs)
    if (q.status == PieceStatus::Unstable) {
      out.applicable = false;
      out.skip_reason = "q_" + std::to_string(q.i) + " is unstable";
      return out;
    }
  out.applicable = true;
  Ideal prod = Ideal::unit(A->ring());
  for (const QEstimate& q : qs) prod = ideal_product(prod, q.ideal);
  // keep the relations inside the preimage after products
  prod = ideal_sum(prod, A->relations().gens());
  out.product = prod;
  out.product_verdict = classify_m_primary(A, prod);
  out.all_ok = true;
  for (const auto& [seed, ann] : anns) {
    bool ok = ann.contains(prod);
    out.rows.push_back(QProductRow{seed, ok});
    if (!ok) out.all_ok = false;
  }
  return out;
}

} // namespace vvlab
