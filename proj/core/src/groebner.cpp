#include "vvlab/groebner.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "vvlab/errors.hpp"
#include "vvlab/field.hpp"

namespace vvlab {

namespace {

Polynomial normal_form_skip(const Polynomial& f,
                            const std::vector<Polynomial>& basis, int skip) {
  const RingPtr& ring = f.ring();
  uint64_t p = ring->p;
  // degree prefilter: a lead of higher total degree can never divide
  std::vector<uint64_t> lead_deg(basis.size(), ~0ull);
  for (size_t k = 0; k < basis.size(); ++k)
    if (!basis[k].is_zero()) lead_deg[k] = basis[k].lead().mon.total_degree();
  std::vector<Term> done;
  Polynomial work = f;
  while (!work.is_zero()) {
    const Term& lt = work.lead();
    uint64_t deg = lt.mon.total_degree();
    int k = -1;
    for (size_t b = 0; b < basis.size(); ++b) {
      if (static_cast<int>(b) == skip || lead_deg[b] > deg) continue;
      if (mono_divides(basis[b].lead().mon, lt.mon)) {
        k = static_cast<int>(b);
        break;
      }
    }
    if (k < 0) {
      done.push_back(lt);
      std::vector<Term> rest(work.terms().begin() + 1, work.terms().end());
      work = Polynomial(ring, std::move(rest));
      continue;
    }
    const Polynomial& g = basis[static_cast<size_t>(k)];
    Term q{mono_div(lt.mon, g.lead().mon),
           mul_mod(lt.coeff, inv_mod(g.lead().coeff, p), p)};
    work = work.sub_term_mul(q, g);
  }
  return Polynomial(ring, std::move(done));
}

struct Pair {
  size_t i, j;
  Monomial lcm;
  uint64_t deg;
};

struct PairLess {
  const MonomialOrder* ord;
  bool operator()(const Pair& a, const Pair& b) const {
    if (a.deg != b.deg) return a.deg < b.deg;
    int c = mono_cmp(a.lcm, b.lcm, *ord);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

// reduced basis of a monomial ideal: the minimal generators
std::vector<Polynomial> monomial_reduced_basis(const std::vector<Polynomial>& gens,
                                               const RingPtr& ring) {
  std::vector<Monomial> mons;
  for (const Polynomial& f : gens)
    if (!f.is_zero()) mons.push_back(f.lead().mon);
  std::vector<Monomial> min;
  for (size_t i = 0; i < mons.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < mons.size() && !redundant; ++j) {
      if (i == j) continue;
      if (!mono_divides(mons[j], mons[i])) continue;
      if (mons[j] == mons[i] && i < j) continue;
      redundant = true;
    }
    if (!redundant) min.push_back(mons[i]);
  }
  std::sort(min.begin(), min.end(), [&](const Monomial& a, const Monomial& b) {
    return mono_cmp(a, b, ring->order) < 0;
  });
  std::vector<Polynomial> out;
  out.reserve(min.size());
  for (Monomial& m : min) out.push_back(Polynomial::monomial(ring, std::move(m), 1));
  return out;
}

bool all_monomials(const std::vector<Polynomial>& gens) {
  for (const Polynomial& f : gens)
    if (f.terms().size() > 1) return false;
  return true;
}

} // namespace

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis) {
  return normal_form_skip(f, basis, -1);
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f, g);
  uint64_t p = f.ring()->p;
  Monomial l = mono_lcm(f.lead().mon, g.lead().mon);
  Term tf{mono_div(l, f.lead().mon), inv_mod(f.lead().coeff, p)};
  Term tg{mono_div(l, g.lead().mon), inv_mod(g.lead().coeff, p)};
  return f.times_term(tf) - g.times_term(tg);
}

namespace {

class Buchberger {
public:
  explicit Buchberger(const RingPtr& ring)
      : ring_(ring), pairs_(PairLess{&ring->order}) {}

  void add_generator(const Polynomial& f) {
    Polynomial h = normal_form(f, basis_);
    if (!h.is_zero()) insert(h.monic());
  }

  void run() {
    while (!pairs_.empty()) {
      Pair pr = *pairs_.begin();
      pairs_.erase(pairs_.begin());
      Polynomial h =
          normal_form(s_polynomial(basis_[pr.i], basis_[pr.j]), basis_);
      if (!h.is_zero()) insert(h.monic());
    }
  }

  std::vector<Polynomial> take() { return std::move(basis_); }

private:
  void insert(const Polynomial& h) {
    size_t t = basis_.size();
    basis_.push_back(h);
    const Monomial& ltt = h.lead().mon;

    // chain pruning of surviving old pairs
    uint64_t dt = ltt.total_degree();
    for (auto it = pairs_.begin(); it != pairs_.end();) {
      bool drop = dt <= it->deg && mono_divides(ltt, it->lcm) &&
                  mono_lcm(basis_[it->i].lead().mon, ltt) != it->lcm &&
                  mono_lcm(basis_[it->j].lead().mon, ltt) != it->lcm;
      it = drop ? pairs_.erase(it) : std::next(it);
    }

    // new pairs (i, t), Gebauer-Moeller M and F steps
    std::vector<Pair> cand;
    cand.reserve(t);
    for (size_t i = 0; i < t; ++i) {
      Monomial l = mono_lcm(basis_[i].lead().mon, ltt);
      uint64_t d = l.total_degree();
      cand.push_back(Pair{i, t, std::move(l), d});
    }
    std::vector<size_t> order(cand.size());
    for (size_t a = 0; a < cand.size(); ++a) order[a] = a;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
      if (cand[a].deg != cand[b].deg) return cand[a].deg < cand[b].deg;
      if (cand[a].lcm.e != cand[b].lcm.e) return cand[a].lcm.e < cand[b].lcm.e;
      return a < b;
    });
    std::vector<bool> alive(cand.size(), true);
    // M-step: strictly smaller lcm kills; scan sorted so divisors come first
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
    // F-step: one representative per equal-lcm group, the group dropped
    // entirely when it contains a coprime pair
    for (size_t ai = 0; ai < order.size();) {
      size_t aj = ai;
      while (aj < order.size() && cand[order[aj]].lcm == cand[order[ai]].lcm) ++aj;
      bool coprime = false;
      size_t keep = cand.size(); // candidate index == generator index i
      for (size_t k = ai; k < aj; ++k) {
        size_t a = order[k];
        if (!alive[a]) continue;
        if (mono_coprime(basis_[cand[a].i].lead().mon, ltt)) coprime = true;
        if (a < keep) keep = a;
      }
      if (!coprime && keep < cand.size()) pairs_.insert(cand[keep]);
      ai = aj;
    }
  }

  RingPtr ring_;
  std::vector<Polynomial> basis_;
  std::multiset<Pair, PairLess> pairs_;
};

std::vector<Polynomial> reduce_basis(std::vector<Polynomial> g,
                                     const RingPtr& ring) {
  // minimalize: drop elements whose lead is divisible by another lead
  std::vector<Polynomial> min;
  for (size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      if (!mono_divides(g[j].lead().mon, g[i].lead().mon)) continue;
      if (g[j].lead().mon == g[i].lead().mon && i < j) continue; // keep first
      redundant = true;
    }
    if (!redundant) min.push_back(g[i]);
  }
  // tail-reduce to the unique reduced basis
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < min.size(); ++i) {
      Polynomial h = normal_form_skip(min[i], min, static_cast<int>(i));
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
  std::sort(min.begin(), min.end(), [&](const Polynomial& a, const Polynomial& b) {
    return mono_cmp(a.lead().mon, b.lead().mon, ring->order) < 0;
  });
  return min;
}

} // namespace

std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& gens) {
  RingPtr ring;
  for (const Polynomial& f : gens) {
    if (f.is_zero()) continue;
    if (!ring)
      ring = f.ring();
    else
      require_same_ring(ring, f.ring());
  }
  if (!ring) {
    if (gens.empty()) throw StructuralError("no generators and no ring");
    return {};
  }
  if (all_monomials(gens)) return monomial_reduced_basis(gens, ring);
  Buchberger bb(ring);
  for (const Polynomial& f : gens)
    if (!f.is_zero()) bb.add_generator(f);
  bb.run();
  return reduce_basis(bb.take(), ring);
}

namespace {

struct LiftedPoly {
  Polynomial f;
  std::vector<Polynomial> rep; // over the original generators
};

LiftedPoly nf_with_lift(LiftedPoly x, const std::vector<LiftedPoly>& basis) {
  const RingPtr& ring = x.f.ring();
  uint64_t p = ring->p;
  std::vector<Term> done;
  while (!x.f.is_zero()) {
    const Term& lt = x.f.lead();
    int k = -1;
    for (size_t b = 0; b < basis.size(); ++b)
      if (mono_divides(basis[b].f.lead().mon, lt.mon)) {
        k = static_cast<int>(b);
        break;
      }
    if (k < 0) {
      done.push_back(lt);
      std::vector<Term> rest(x.f.terms().begin() + 1, x.f.terms().end());
      x.f = Polynomial(ring, std::move(rest));
      continue;
    }
    const LiftedPoly& g = basis[static_cast<size_t>(k)];
    Term q{mono_div(lt.mon, g.f.lead().mon),
           mul_mod(lt.coeff, inv_mod(g.f.lead().coeff, p), p)};
    x.f = x.f.sub_term_mul(q, g.f);
    Polynomial qp = Polynomial::monomial(ring, q.mon, q.coeff);
    for (size_t i = 0; i < x.rep.size(); ++i)
      x.rep[i] = x.rep[i] - qp * g.rep[i];
  }
  x.f = Polynomial(ring, std::move(done));
  return x;
}

} // namespace

LiftedBasis groebner_with_lift(const std::vector<Polynomial>& gens) {
  if (gens.empty()) throw StructuralError("empty generator list");
  RingPtr ring = gens.front().ring();
  for (const Polynomial& f : gens) require_same_ring(ring, f.ring());
  size_t n = gens.size();

  std::vector<LiftedPoly> basis;
  auto unit_rep = [&](size_t i) {
    std::vector<Polynomial> r(n, Polynomial::zero(ring));
    r[i] = Polynomial::constant(ring, 1);
    return r;
  };
  auto insert = [&](LiftedPoly x) {
    uint64_t c = inv_mod(x.f.lead().coeff, ring->p);
    x.f = x.f.scaled(c);
    for (auto& r : x.rep) r = r.scaled(c);
    basis.push_back(std::move(x));
  };

  for (size_t i = 0; i < n; ++i) {
    if (gens[i].is_zero()) continue;
    LiftedPoly x{gens[i], unit_rep(i)};
    x = nf_with_lift(std::move(x), basis);
    if (!x.f.is_zero()) insert(std::move(x));
  }
  // plain pair loop (no pruning; representation safety over speed)
  size_t i = 0;
  bool grew = true;
  while (grew) {
    grew = false;
    for (i = 0; i < basis.size(); ++i) {
      for (size_t j = i + 1; j < basis.size(); ++j) {
        if (mono_coprime(basis[i].f.lead().mon, basis[j].f.lead().mon)) continue;
        uint64_t p = ring->p;
        Monomial l = mono_lcm(basis[i].f.lead().mon, basis[j].f.lead().mon);
        Term ti{mono_div(l, basis[i].f.lead().mon),
                inv_mod(basis[i].f.lead().coeff, p)};
        Term tj{mono_div(l, basis[j].f.lead().mon),
                inv_mod(basis[j].f.lead().coeff, p)};
        LiftedPoly s;
        s.f = basis[i].f.times_term(ti) - basis[j].f.times_term(tj);
        Polynomial pi = Polynomial::monomial(ring, ti.mon, ti.coeff);
        Polynomial pj = Polynomial::monomial(ring, tj.mon, tj.coeff);
        s.rep.reserve(n);
        for (size_t k = 0; k < n; ++k)
          s.rep.push_back(pi * basis[i].rep[k] - pj * basis[j].rep[k]);
        s = nf_with_lift(std::move(s), basis);
        if (!s.f.is_zero()) {
          insert(std::move(s));
          grew = true;
        }
      }
      if (grew) break;
    }
  }

  LiftedBasis out;
  for (auto& b : basis) {
    out.basis.push_back(std::move(b.f));
    out.rep.push_back(std::move(b.rep));
  }
  return out;
}

std::vector<Polynomial> lift_membership(const Polynomial& f,
                                        const std::vector<Polynomial>& gens) {
  LiftedBasis lb = groebner_with_lift(gens);
  RingPtr ring = f.ring();
  std::vector<LiftedPoly> basis;
  basis.reserve(lb.basis.size());
  for (size_t k = 0; k < lb.basis.size(); ++k)
    basis.push_back(LiftedPoly{lb.basis[k], lb.rep[k]});
  LiftedPoly x{f, std::vector<Polynomial>(gens.size(), Polynomial::zero(ring))};
  // f = sum(q_k basis_k) + nf; track as negative rep so x.rep ends up with
  // the coefficients of f over gens
  LiftedPoly r = nf_with_lift(std::move(x), basis);
  if (!r.f.is_zero())
    throw PreconditionError("element is not in the ideal; cannot lift");
  std::vector<Polynomial> coeffs;
  coeffs.reserve(gens.size());
  for (auto& c : r.rep) coeffs.push_back(-c);
  return coeffs;
}

Polynomial exact_divide(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f, g);
  if (g.is_zero()) throw StructuralError("division by zero polynomial");
  const RingPtr& ring = f.ring();
  uint64_t p = ring->p;
  Polynomial work = f;
  std::vector<Term> q;
  while (!work.is_zero()) {
    const Term& lt = work.lead();
    if (!mono_divides(g.lead().mon, lt.mon))
      throw StructuralError("polynomial division is not exact");
    Term t{mono_div(lt.mon, g.lead().mon),
           mul_mod(lt.coeff, inv_mod(g.lead().coeff, p), p)};
    work = work.sub_term_mul(t, g);
    q.push_back(std::move(t));
  }
  return Polynomial(ring, std::move(q));
}

} // namespace vvlab
