#include "vvlab/module.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "vvlab/errors.hpp"
#include "vvlab/field.hpp"
#include "vvlab/hilbert.hpp"

namespace vvlab {

namespace {

// POT: lower component dominates
int modterm_cmp(const ModTerm& a, const ModTerm& b, const MonomialOrder& ord) {
  if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
  return mono_cmp(a.mon, b.mon, ord);
}

} // namespace

VecPoly::VecPoly(RingPtr ring, uint32_t rank, std::vector<ModTerm> raw)
    : ring_(std::move(ring)), rank_(rank), terms_(std::move(raw)) {
  for (const ModTerm& t : terms_)
    if (t.comp >= rank_) throw StructuralError("module term component out of range");
  normalize();
}

VecPoly VecPoly::from_poly(const Polynomial& f, uint32_t rank, uint32_t comp) {
  std::vector<ModTerm> terms;
  terms.reserve(f.terms().size());
  for (const Term& t : f.terms()) terms.push_back(ModTerm{comp, t.mon, t.coeff});
  return VecPoly(f.ring(), rank, std::move(terms));
}

const ModTerm& VecPoly::lead() const {
  if (terms_.empty()) throw InternalError("lead of zero module element");
  return terms_.front();
}

Polynomial VecPoly::component(uint32_t c) const {
  std::vector<Term> out;
  for (const ModTerm& t : terms_)
    if (t.comp == c) out.push_back(Term{t.mon, t.coeff});
  return Polynomial(ring_, std::move(out));
}

VecPoly VecPoly::slice(uint32_t lo, uint32_t hi) const {
  std::vector<ModTerm> out;
  for (const ModTerm& t : terms_)
    if (t.comp >= lo && t.comp < hi)
      out.push_back(ModTerm{t.comp - lo, t.mon, t.coeff});
  return VecPoly(ring_, hi - lo, std::move(out));
}

bool VecPoly::supported_below(uint32_t c) const {
  for (const ModTerm& t : terms_)
    if (t.comp >= c) return false;
  return true;
}

bool VecPoly::supported_at_or_above(uint32_t c) const {
  for (const ModTerm& t : terms_)
    if (t.comp < c) return false;
  return true;
}

void VecPoly::normalize() {
  uint64_t p = ring_->p;
  for (ModTerm& t : terms_) t.coeff %= p;
  std::sort(terms_.begin(), terms_.end(), [&](const ModTerm& a, const ModTerm& b) {
    return modterm_cmp(a, b, ring_->order) > 0;
  });
  std::vector<ModTerm> out;
  out.reserve(terms_.size());
  for (ModTerm& t : terms_) {
    if (!out.empty() && out.back().comp == t.comp && out.back().mon == t.mon)
      out.back().coeff = add_mod(out.back().coeff, t.coeff, p);
    else
      out.push_back(std::move(t));
    if (!out.empty() && out.back().coeff == 0) out.pop_back();
  }
  terms_ = std::move(out);
}

VecPoly VecPoly::times_term(const Term& t) const {
  uint64_t p = ring_->p;
  uint64_t c = t.coeff % p;
  VecPoly r(ring_, rank_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const ModTerm& u : terms_)
    r.terms_.push_back(ModTerm{u.comp, mono_mul(t.mon, u.mon), mul_mod(u.coeff, c, p)});
  return r;
}

VecPoly VecPoly::sub_term_mul(const Term& t, const VecPoly& g) const {
  require_same_ring(ring_, g.ring());
  if (rank_ != g.rank_) throw StructuralError("module rank mismatch");
  uint64_t p = ring_->p;
  uint64_t c = neg_mod(t.coeff % p, p);
  const auto& ta = terms_;
  const auto& tb = g.terms_;
  std::vector<ModTerm> out;
  out.reserve(ta.size() + tb.size());
  size_t i = 0, j = 0;
  while (i < ta.size() || j < tb.size()) {
    if (j >= tb.size()) {
      out.push_back(ta[i++]);
      continue;
    }
    ModTerm mb{tb[j].comp, mono_mul(t.mon, tb[j].mon), mul_mod(tb[j].coeff, c, p)};
    if (i >= ta.size()) {
      if (mb.coeff) out.push_back(std::move(mb));
      ++j;
      continue;
    }
    int cmp = modterm_cmp(ta[i], mb, ring_->order);
    if (cmp > 0) {
      out.push_back(ta[i++]);
    } else if (cmp < 0) {
      if (mb.coeff) out.push_back(std::move(mb));
      ++j;
    } else {
      uint64_t v = add_mod(ta[i].coeff, mb.coeff, p);
      if (v) out.push_back(ModTerm{ta[i].comp, ta[i].mon, v});
      ++i;
      ++j;
    }
  }
  VecPoly r(ring_, rank_);
  r.terms_ = std::move(out);
  return r;
}

VecPoly VecPoly::scaled(uint64_t c) const {
  uint64_t p = ring_->p;
  c %= p;
  VecPoly r(ring_, rank_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const ModTerm& u : terms_)
    r.terms_.push_back(ModTerm{u.comp, u.mon, mul_mod(u.coeff, c, p)});
  return r;
}

VecPoly VecPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(inv_mod(lead().coeff, ring_->p));
}

std::string VecPoly::str() const {
  std::ostringstream os;
  os << "[";
  for (uint32_t c = 0; c < rank_; ++c) {
    if (c) os << ", ";
    os << component(c).str();
  }
  os << "]";
  return os.str();
}

VecPoly module_normal_form(const VecPoly& v, const std::vector<VecPoly>& basis) {
  const RingPtr& ring = v.ring();
  uint64_t p = ring->p;
  std::vector<ModTerm> done;
  VecPoly work = v;
  while (!work.is_zero()) {
    const ModTerm& lt = work.lead();
    int k = -1;
    for (size_t b = 0; b < basis.size(); ++b) {
      if (basis[b].is_zero()) continue;
      const ModTerm& bl = basis[b].lead();
      if (bl.comp == lt.comp && mono_divides(bl.mon, lt.mon)) {
        k = static_cast<int>(b);
        break;
      }
    }
    if (k < 0) {
      done.push_back(lt);
      VecPoly rest(ring, work.rank());
      std::vector<ModTerm> tail(work.terms().begin() + 1, work.terms().end());
      rest = VecPoly(ring, work.rank(), std::move(tail));
      work = std::move(rest);
      continue;
    }
    const VecPoly& g = basis[static_cast<size_t>(k)];
    Term q{mono_div(lt.mon, g.lead().mon),
           mul_mod(lt.coeff, inv_mod(g.lead().coeff, p), p)};
    work = work.sub_term_mul(q, g);
  }
  return VecPoly(v.ring(), v.rank(), std::move(done));
}

namespace {

struct MPair {
  size_t i, j;
  Monomial lcm;
  uint64_t deg;
};

struct MPairLess {
  const MonomialOrder* ord;
  bool operator()(const MPair& a, const MPair& b) const {
    if (a.deg != b.deg) return a.deg < b.deg;
    int c = mono_cmp(a.lcm, b.lcm, *ord);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

VecPoly module_spoly(const VecPoly& f, const VecPoly& g) {
  uint64_t p = f.ring()->p;
  Monomial l = mono_lcm(f.lead().mon, g.lead().mon);
  Term tf{mono_div(l, f.lead().mon), inv_mod(f.lead().coeff, p)};
  Term tg{mono_div(l, g.lead().mon), inv_mod(g.lead().coeff, p)};
  VecPoly a = f.times_term(tf);
  return a.sub_term_mul(tg, g);
}

class ModuleBuchberger {
public:
  ModuleBuchberger(RingPtr ring, uint32_t rank, bool product_criterion)
      : ring_(std::move(ring)), rank_(rank), product_(product_criterion),
        pairs_(MPairLess{&ring_->order}) {}

  void add_generator(const VecPoly& v) {
    VecPoly h = module_normal_form(v, basis_);
    if (!h.is_zero()) insert(h.monic());
  }

  void run() {
    while (!pairs_.empty()) {
      MPair pr = *pairs_.begin();
      pairs_.erase(pairs_.begin());
      VecPoly h =
          module_normal_form(module_spoly(basis_[pr.i], basis_[pr.j]), basis_);
      if (!h.is_zero()) insert(h.monic());
    }
  }

  std::vector<VecPoly> take() { return std::move(basis_); }

private:
  void insert(const VecPoly& h) {
    size_t t = basis_.size();
    basis_.push_back(h);
    const ModTerm& ltt = h.lead();

    uint64_t dt = ltt.mon.total_degree();
    for (auto it = pairs_.begin(); it != pairs_.end();) {
      bool drop = dt <= it->deg && basis_[it->i].lead().comp == ltt.comp &&
                  mono_divides(ltt.mon, it->lcm) &&
                  mono_lcm(basis_[it->i].lead().mon, ltt.mon) != it->lcm &&
                  mono_lcm(basis_[it->j].lead().mon, ltt.mon) != it->lcm;
      it = drop ? pairs_.erase(it) : std::next(it);
    }

    std::vector<MPair> cand;
    std::vector<size_t> gen_of; // candidate -> generator index
    for (size_t i = 0; i < t; ++i) {
      if (basis_[i].lead().comp != ltt.comp) continue;
      Monomial l = mono_lcm(basis_[i].lead().mon, ltt.mon);
      uint64_t d = l.total_degree();
      cand.push_back(MPair{i, t, std::move(l), d});
      gen_of.push_back(i);
    }
    std::vector<size_t> order(cand.size());
    for (size_t a = 0; a < cand.size(); ++a) order[a] = a;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
      if (cand[a].deg != cand[b].deg) return cand[a].deg < cand[b].deg;
      if (cand[a].lcm.e != cand[b].lcm.e) return cand[a].lcm.e < cand[b].lcm.e;
      return a < b;
    });
    std::vector<bool> alive(cand.size(), true);
    for (size_t ai = 0; ai < order.size(); ++ai) {
      size_t a = order[ai];
      if (!alive[a]) continue;
      for (size_t bi = 0; bi < ai; ++bi) {
        size_t b = order[bi];
        if (!alive[b] || cand[b].deg > cand[a].deg) continue;
        if (cand[b].lcm != cand[a].lcm && mono_divides(cand[b].lcm, cand[a].lcm)) {
          alive[a] = false;
          break;
        }
      }
    }
    for (size_t ai = 0; ai < order.size();) {
      size_t aj = ai;
      while (aj < order.size() && cand[order[aj]].lcm == cand[order[ai]].lcm) ++aj;
      bool coprime = false;
      size_t keep = cand.size();
      for (size_t k = ai; k < aj; ++k) {
        size_t a = order[k];
        if (!alive[a]) continue;
        // the product criterion is only valid in the rank-one (ideal) case
        if (product_ && rank_ == 1 &&
            mono_coprime(basis_[cand[a].i].lead().mon, ltt.mon))
          coprime = true;
        if (a < keep) keep = a;
      }
      if (!coprime && keep < cand.size()) pairs_.insert(cand[keep]);
      ai = aj;
    }
  }

  RingPtr ring_;
  uint32_t rank_;
  bool product_;
  std::vector<VecPoly> basis_;
  std::multiset<MPair, MPairLess> pairs_;
};

std::vector<VecPoly> reduce_module_basis(std::vector<VecPoly> g,
                                         const RingPtr& ring) {
  std::vector<VecPoly> min;
  for (size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      const ModTerm &a = g[i].lead(), &b = g[j].lead();
      if (b.comp != a.comp || !mono_divides(b.mon, a.mon)) continue;
      if (b.mon == a.mon && i < j) continue;
      redundant = true;
    }
    if (!redundant) min.push_back(g[i]);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < min.size(); ++i) {
      VecPoly self = min[i];
      VecPoly placeholder(ring, self.rank()); // zero, skipped by reducer
      std::swap(min[i], placeholder);
      VecPoly h = module_normal_form(self, min);
      std::swap(min[i], placeholder);
      if (!(h == min[i])) {
        changed = true;
        if (h.is_zero()) {
          min.erase(min.begin() + static_cast<long>(i));
          --i;
        } else {
          min[i] = h.monic();
        }
      }
    }
  }
  std::sort(min.begin(), min.end(), [&](const VecPoly& a, const VecPoly& b) {
    return modterm_cmp(a.lead(), b.lead(), ring->order) < 0;
  });
  return min;
}

} // namespace

std::vector<VecPoly> module_groebner(const std::vector<VecPoly>& gens) {
  RingPtr ring;
  uint32_t rank = 0;
  for (const VecPoly& v : gens) {
    if (v.is_zero() && !v.ring()) continue;
    if (!ring) {
      ring = v.ring();
      rank = v.rank();
    } else {
      require_same_ring(ring, v.ring());
      if (v.rank() != rank) throw StructuralError("module rank mismatch");
    }
  }
  if (!ring) return {};
  ModuleBuchberger bb(ring, rank, true);
  for (const VecPoly& v : gens)
    if (!v.is_zero()) bb.add_generator(v);
  bb.run();
  return reduce_module_basis(bb.take(), ring);
}

std::vector<VecPoly> module_syzygies(const std::vector<VecPoly>& gens) {
  if (gens.empty()) return {};
  RingPtr ring = gens.front().ring();
  uint32_t r = gens.front().rank();
  uint32_t s = static_cast<uint32_t>(gens.size());
  for (const VecPoly& v : gens) {
    require_same_ring(ring, v.ring());
    if (v.rank() != r) throw StructuralError("module rank mismatch");
  }
  uint32_t big = r + s;
  std::vector<VecPoly> ext;
  ext.reserve(s);
  for (uint32_t i = 0; i < s; ++i) {
    std::vector<ModTerm> terms;
    for (const ModTerm& t : gens[i].terms())
      terms.push_back(ModTerm{t.comp, t.mon, t.coeff});
    terms.push_back(ModTerm{r + i, Monomial::one(ring->nvars()), 1});
    ext.push_back(VecPoly(ring, big, std::move(terms)));
  }
  std::vector<VecPoly> out;
  for (const VecPoly& v : module_groebner(ext))
    if (v.supported_at_or_above(r)) out.push_back(v.slice(r, big));
  return out;
}

std::optional<uint64_t> module_colength(uint32_t rank,
                                        const std::vector<VecPoly>& gb,
                                        const RingPtr& ring) {
  uint64_t total = 0;
  for (uint32_t c = 0; c < rank; ++c) {
    std::vector<Monomial> leads;
    for (const VecPoly& v : gb)
      if (!v.is_zero() && v.lead().comp == c) leads.push_back(v.lead().mon);
    auto sm = standard_monomials(leads, ring->nvars());
    if (!sm) return std::nullopt;
    total += sm->size();
  }
  return total;
}

std::optional<uint64_t> subquotient_length(const Ideal& U, const Ideal& W) {
  require_same_ring(U.ring(), W.ring());
  if (!U.contains(W))
    throw PreconditionError("subquotient_length: W is not contained in U");
  auto cu = U.colength();
  auto cw = W.colength();
  if (cu && cw) return *cw - *cu;

  const RingPtr& ring = U.ring();
  const std::vector<Polynomial>& u = U.basis();
  if (u.empty()) {
    // U = 0 forces W = 0
    return 0;
  }
  std::vector<VecPoly> combined;
  combined.reserve(u.size() + W.basis().size());
  for (const Polynomial& f : u) combined.push_back(VecPoly::from_poly(f, 1, 0));
  for (const Polynomial& f : W.basis())
    combined.push_back(VecPoly::from_poly(f, 1, 0));
  std::vector<VecPoly> syz = module_syzygies(combined);
  uint32_t s = static_cast<uint32_t>(u.size());
  std::vector<VecPoly> kernel_gens;
  for (const VecPoly& v : syz) {
    VecPoly head = v.slice(0, s);
    if (!head.is_zero()) kernel_gens.push_back(std::move(head));
  }
  std::vector<VecPoly> gb = module_groebner(kernel_gens);
  return module_colength(s, gb, ring);
}

} // namespace vvlab
