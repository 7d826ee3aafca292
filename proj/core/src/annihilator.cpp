#include "vvlab/annihilator.hpp"

#include <functional>
#include <unordered_map>

#include "vvlab/errors.hpp"
#include "vvlab/hilbert.hpp"

namespace vvlab {

SparseMat block_diag(const std::vector<const SparseMat*>& blocks) {
  size_t rows = 0, cols = 0;
  uint64_t p = 2;
  for (const SparseMat* b : blocks) {
    rows += b->rows();
    cols += b->cols();
    p = b->p();
  }
  SparseMat out(rows, cols, p);
  size_t ro = 0, co = 0;
  for (const SparseMat* b : blocks) {
    for (size_t c = 0; c < b->cols(); ++c)
      for (const auto& [r, v] : b->column(c)) out.add(ro + r, co + c, v);
    ro += b->rows();
    co += b->cols();
  }
  return out;
}

namespace {

std::vector<Monomial> all_monomials_of_degree(size_t nvars, uint64_t d) {
  std::vector<Monomial> out;
  Monomial cur(nvars);
  std::function<void(size_t, uint64_t)> rec = [&](size_t v, uint64_t rem) {
    if (v + 1 == nvars) {
      cur.e[v] = static_cast<Exp>(rem);
      out.push_back(cur);
      cur.e[v] = 0;
      return;
    }
    for (uint64_t e = 0; e <= rem; ++e) {
      cur.e[v] = static_cast<Exp>(e);
      rec(v + 1, rem - e);
    }
    cur.e[v] = 0;
  };
  if (nvars == 0) {
    if (d == 0) out.push_back(Monomial(0));
    return out;
  }
  rec(0, d);
  return out;
}

} // namespace

Ideal subquotient_annihilator(const ModelPtr& A,
                              const std::vector<SparseMat>& var_actions,
                              const ModMatrix& Z, const ModMatrix& B,
                              int degree_cap) {
  const RingPtr& ring = A->ring();
  uint64_t p = ring->p;
  size_t nv = ring->nvars();
  size_t ambient = Z.rows();
  size_t z = Z.cols();
  if (z == 0) return Ideal::unit(ring);

  RowSpace bspace(ambient, p);
  for (size_t c = 0; c < B.cols(); ++c) {
    std::vector<uint32_t> col(ambient);
    for (size_t r = 0; r < ambient; ++r) col[r] = B.at(r, c);
    bspace.add(std::move(col));
  }

  // acted[m][k] = m . (k-th column of Z), built over the monomial lattice
  std::unordered_map<Monomial, std::vector<std::vector<uint32_t>>, MonomialHash>
      acted;
  {
    std::vector<std::vector<uint32_t>> base(z, std::vector<uint32_t>(ambient));
    for (size_t k = 0; k < z; ++k)
      for (size_t r = 0; r < ambient; ++r) base[k][r] = Z.at(r, k);
    acted.emplace(Monomial::one(nv), std::move(base));
  }
  std::function<const std::vector<std::vector<uint32_t>>&(const Monomial&)> act_of =
      [&](const Monomial& m) -> const std::vector<std::vector<uint32_t>>& {
    auto it = acted.find(m);
    if (it != acted.end()) return it->second;
    size_t v = 0;
    while (v < nv && m.e[v] == 0) ++v;
    Monomial prev = m;
    prev.e[v] -= 1;
    const auto& before = act_of(prev);
    std::vector<std::vector<uint32_t>> cur(z);
    for (size_t k = 0; k < z; ++k) cur[k] = var_actions[v].apply(before[k]);
    return acted.emplace(m, std::move(cur)).first->second;
  };

  std::vector<Monomial> kill_layer;
  int D = -1;
  for (int d = 0; d <= degree_cap; ++d) {
    // build all actions of this degree first (DP needs the previous layer)
    std::vector<Monomial> layer = all_monomials_of_degree(nv, static_cast<uint64_t>(d));
    bool all_kill = true;
    for (const Monomial& m : layer) {
      const auto& vecs = act_of(m);
      for (size_t k = 0; k < z && all_kill; ++k)
        if (!bspace.contains(vecs[k])) all_kill = false;
      if (!all_kill) break;
    }
    if (all_kill && d > 0) {
      D = d - 1;
      kill_layer = std::move(layer);
      break;
    }
  }
  if (D < 0)
    throw InternalError("annihilator layer search exceeded its degree cap");

  // kernel over standard monomials of degree <= D
  std::vector<Monomial> candidates;
  {
    std::vector<Monomial> leads;
    for (const Polynomial& g : A->relations().basis()) leads.push_back(g.lead().mon);
    for (int d = 0; d <= D; ++d)
      for (const Monomial& m :
           standard_monomials_of_degree(leads, nv, static_cast<uint64_t>(d)))
        candidates.push_back(m);
  }
  std::vector<Polynomial> gens;
  if (!candidates.empty()) {
    // rows: (column of Z, residual coordinate); columns: candidate monomials
    ModMatrix C(z * ambient, candidates.size(), p);
    for (size_t j = 0; j < candidates.size(); ++j) {
      const auto& vecs = act_of(candidates[j]);
      for (size_t k = 0; k < z; ++k) {
        std::vector<uint32_t> res = vecs[k];
        bspace.reduce(res);
        for (size_t r = 0; r < ambient; ++r)
          if (res[r]) C.set(k * ambient + r, j, res[r]);
      }
    }
    ModMatrix K = kernel_basis(C);
    for (size_t c = 0; c < K.cols(); ++c) {
      std::vector<Term> terms;
      for (size_t j = 0; j < candidates.size(); ++j)
        if (K.at(j, c)) terms.push_back(Term{candidates[j], K.at(j, c)});
      gens.push_back(Polynomial(ring, std::move(terms)));
    }
  }
  for (const Monomial& m : kill_layer)
    gens.push_back(Polynomial::monomial(ring, m, 1));
  for (const Polynomial& rel : A->relations().gens()) gens.push_back(rel);
  return Ideal(ring, std::move(gens));
}

} // namespace vvlab
