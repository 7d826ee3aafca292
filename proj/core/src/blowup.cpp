#include "vvlab/blowup.hpp"

#include <algorithm>

#include "vvlab/errors.hpp"
#include "vvlab/groebner.hpp"

namespace vvlab {

namespace {

std::vector<std::string> t_names(const RingPtr& base, size_t count) {
  bool collision = false;
  std::vector<std::string> names;
  for (size_t j = 0; j < count; ++j) {
    std::string n = "T" + std::to_string(j + 1);
    for (const std::string& v : base->var_names)
      if (v == n) collision = true;
    names.push_back(std::move(n));
  }
  if (collision)
    for (std::string& n : names) n = "@" + n;
  return names;
}

} // namespace

ReesPresentation rees_presentation(const MPrimaryIdeal& I) {
  const ModelPtr& A = I.model();
  const RingPtr& xr = A->ring();
  const std::vector<Polynomial>& f = I.gens();
  if (f.empty()) throw PreconditionError("ideal without generators");
  size_t nx = xr->nvars(), nt = f.size();

  // T-weights: weighted degrees of the generators when they are forms
  bool graded = true;
  std::vector<int64_t> tw(nt, 1);
  for (size_t j = 0; j < nt; ++j) {
    if (f[j].is_weighted_homogeneous() && !f[j].is_zero())
      tw[j] = static_cast<int64_t>(f[j].weighted_degree());
    else
      graded = false;
  }
  if (!graded) tw.assign(nt, 1);

  ReesPresentation pres;
  pres.A = A;
  pres.n_x = nx;
  pres.n_t = nt;
  pres.matched_gens = f;
  pres.t_weights_graded = graded;
  std::vector<int64_t> w = xr->weights;
  w.insert(w.end(), tw.begin(), tw.end());
  std::vector<std::string> names = xr->var_names;
  std::vector<std::string> tn = t_names(xr, nt);
  names.insert(names.end(), tn.begin(), tn.end());
  pres.xt_ring = make_ring(xr->p, std::move(names), std::move(w));

  // elimination ring k[@t, x, T], lead block {@t}
  RingPtr elim = extend_front(pres.xt_ring, {"@t"});
  std::vector<size_t> up_xt(nx + nt);
  for (size_t i = 0; i < nx + nt; ++i) up_xt[i] = i + 1;
  std::vector<size_t> up_x(nx);
  for (size_t i = 0; i < nx; ++i) up_x[i] = i + 1;

  Polynomial t = Polynomial::variable(elim, 0);
  std::vector<Polynomial> gens;
  for (const Polynomial& rel : A->relations().gens())
    gens.push_back(map_poly(rel, elim, up_x));
  for (size_t j = 0; j < nt; ++j) {
    Polynomial Tj = Polynomial::variable(elim, 1 + nx + j);
    gens.push_back(Tj - map_poly(f[j], elim, up_x) * t);
  }
  std::vector<Polynomial> q;
  for (const Polynomial& h : groebner_basis(gens)) {
    bool has_t = false;
    for (const Term& u : h.terms())
      if (u.mon.e[0]) has_t = true;
    if (has_t) continue;
    std::vector<Term> terms;
    for (const Term& u : h.terms()) {
      Monomial m(nx + nt);
      for (size_t v = 1; v < 1 + nx + nt; ++v) m.e[v - 1] = u.mon.e[v];
      terms.push_back(Term{std::move(m), u.coeff});
    }
    q.push_back(Polynomial(pres.xt_ring, std::move(terms)));
  }
  pres.rees_ideal = Ideal(pres.xt_ring, std::move(q));

  // substitution check: T_j -> f_j t must kill every generator modulo J
  RingPtr check = extend_back(xr, {"@t"});
  std::vector<size_t> x_to_check(nx);
  for (size_t i = 0; i < nx; ++i) x_to_check[i] = i;
  Polynomial tc = Polynomial::variable(check, nx);
  std::vector<Polynomial> ft;
  for (size_t j = 0; j < nt; ++j)
    ft.push_back(map_poly(f[j], check, x_to_check) * tc);
  std::vector<Polynomial> J_check;
  for (const Polynomial& rel : A->relations().basis())
    J_check.push_back(map_poly(rel, check, x_to_check));
  for (const Polynomial& g : pres.rees_ideal.basis()) {
    Polynomial image = Polynomial::zero(check);
    for (const Term& u : g.terms()) {
      Monomial xm(nx + 1);
      for (size_t v = 0; v < nx; ++v) xm.e[v] = u.mon.e[v];
      Polynomial part = Polynomial::monomial(check, std::move(xm), u.coeff);
      for (size_t j = 0; j < nt; ++j)
        for (Exp e = 0; e < u.mon.e[nx + j]; ++e) part = part * ft[j];
      image = image + part;
    }
    if (!normal_form(image, J_check).is_zero())
      throw VerificationError("Rees presentation failed the substitution check");
  }
  return pres;
}

GradedPresentation assoc_graded_presentation(const MPrimaryIdeal& I,
                                             unsigned hilbert_check_bound) {
  GradedPresentation G;
  G.rees = rees_presentation(I);
  const ReesPresentation& R = G.rees;
  std::vector<size_t> up(R.n_x);
  for (size_t i = 0; i < R.n_x; ++i) up[i] = i;
  std::vector<Polynomial> gens = R.rees_ideal.gens();
  for (const Polynomial& fj : R.matched_gens)
    gens.push_back(map_poly(fj, R.xt_ring, up));
  G.g_ideal = Ideal(R.xt_ring, std::move(gens));

  for (unsigned n = 0; n <= hilbert_check_bound; ++n) {
    uint64_t lhs = graded_piece_dim(G, n);
    auto c1 = I.power(n + 1).colength();
    auto c0 = I.power(n).colength();
    if (!c0 || !c1)
      throw InternalError("powers of an m-primary ideal must have finite colength");
    if (lhs != *c1 - *c0)
      throw VerificationError(
          "associated graded presentation failed the Hilbert check at degree " +
          std::to_string(n));
  }
  return G;
}

uint64_t graded_piece_dim(const GradedPresentation& G, unsigned n) {
  const ReesPresentation& R = G.rees;
  std::vector<Monomial> leads;
  for (const Polynomial& g : G.g_ideal.basis()) leads.push_back(g.lead().mon);

  // T-monomials of degree n
  std::vector<Monomial> tpart;
  Monomial cur(R.n_x + R.n_t);
  std::function<void(size_t, unsigned)> rec = [&](size_t j, unsigned rem) {
    if (j + 1 == R.n_t) {
      cur.e[R.n_x + j] = rem;
      tpart.push_back(cur);
      cur.e[R.n_x + j] = 0;
      return;
    }
    for (unsigned e = 0; e <= rem; ++e) {
      cur.e[R.n_x + j] = e;
      rec(j + 1, rem - e);
    }
    cur.e[R.n_x + j] = 0;
  };
  rec(0, n);

  // count standard monomials x^a T^alpha layer by layer in |a|; for a fixed
  // alpha an empty layer stays empty, so active alphas shrink to none
  uint64_t total = 0;
  std::vector<char> active(tpart.size(), 1);
  size_t remaining = tpart.size();
  std::vector<Monomial> xmons;
  for (uint64_t d = 0; remaining > 0; ++d) {
    if (d > 4096) throw InternalError("graded piece enumeration did not terminate");
    xmons.clear();
    Monomial xcur(R.n_x + R.n_t);
    std::function<void(size_t, uint64_t)> xrec = [&](size_t v, uint64_t rem) {
      if (v + 1 == R.n_x) {
        xcur.e[v] = static_cast<Exp>(rem);
        xmons.push_back(xcur);
        xcur.e[v] = 0;
        return;
      }
      for (uint64_t e = 0; e <= rem; ++e) {
        xcur.e[v] = static_cast<Exp>(e);
        xrec(v + 1, rem - e);
      }
      xcur.e[v] = 0;
    };
    if (R.n_x == 0) {
      if (d == 0) xmons.push_back(Monomial(R.n_t));
    } else {
      xrec(0, d);
    }
    for (size_t a = 0; a < tpart.size(); ++a) {
      if (!active[a]) continue;
      uint64_t layer = 0;
      for (const Monomial& xm : xmons) {
        Monomial full = mono_mul(xm, tpart[a]);
        bool divisible = false;
        for (const Monomial& l : leads)
          if (mono_divides(l, full)) {
            divisible = true;
            break;
          }
        if (!divisible) ++layer;
      }
      if (layer == 0) {
        active[a] = 0;
        --remaining;
      }
      total += layer;
    }
  }
  return total;
}

InitialForm initial_form(const Polynomial& a, const MPrimaryIdeal& I,
                         const GradedPresentation& G) {
  const ModelPtr& A = I.model();
  Polynomial red = A->reduce(a);
  if (red.is_zero())
    throw PreconditionError("initial form of zero is undefined");

  unsigned cap = std::max<unsigned>(64, 4 * static_cast<unsigned>(I.adic_bound()) + 16);
  unsigned v = 0;
  while (v + 1 <= cap && I.power(v + 1).contains(red)) ++v;
  if (v + 1 > cap) throw InternalError("initial-form order exceeded its cap");

  InitialForm out;
  out.source = red;
  out.order = v;
  const ReesPresentation& R = G.rees;
  if (v == 0) {
    std::vector<size_t> up(R.n_x);
    for (size_t i = 0; i < R.n_x; ++i) up[i] = i;
    out.representative =
        normal_form(map_poly(normal_form(red, I.handle()), R.xt_ring, up),
                    G.g_ideal);
    return out;
  }

  // products of v generators, indexed by multiexponents alpha with |alpha| = v
  std::vector<std::vector<Exp>> alphas;
  std::vector<Exp> acur(R.n_t, 0);
  std::function<void(size_t, unsigned)> rec = [&](size_t j, unsigned rem) {
    if (j + 1 == R.n_t) {
      acur[j] = rem;
      alphas.push_back(acur);
      acur[j] = 0;
      return;
    }
    for (unsigned e = 0; e <= rem; ++e) {
      acur[j] = e;
      rec(j + 1, rem - e);
    }
    acur[j] = 0;
  };
  rec(0, v);

  std::vector<Polynomial> lift_gens;
  for (const auto& alpha : alphas) {
    Polynomial prod = Polynomial::constant(A->ring(), 1);
    for (size_t j = 0; j < R.n_t; ++j)
      for (Exp e = 0; e < alpha[j]; ++e) prod = prod * R.matched_gens[j];
    lift_gens.push_back(std::move(prod));
  }
  size_t nprod = lift_gens.size();
  for (const Polynomial& rel : A->relations().basis()) lift_gens.push_back(rel);

  std::vector<Polynomial> q = lift_membership(red, lift_gens);
  std::vector<size_t> up(R.n_x);
  for (size_t i = 0; i < R.n_x; ++i) up[i] = i;
  Polynomial rep = Polynomial::zero(R.xt_ring);
  for (size_t k = 0; k < nprod; ++k) {
    Polynomial c = normal_form(q[k], I.handle());
    if (c.is_zero()) continue;
    Monomial tm(R.n_x + R.n_t);
    for (size_t j = 0; j < R.n_t; ++j) tm.e[R.n_x + j] = alphas[k][j];
    rep = rep + map_poly(c, R.xt_ring, up) *
                    Polynomial::monomial(R.xt_ring, std::move(tm), 1);
  }
  out.representative = normal_form(rep, G.g_ideal);
  return out;
}

Polynomial combination_form(const GradedPresentation& G,
                            const std::vector<uint64_t>& coeffs) {
  const ReesPresentation& R = G.rees;
  if (coeffs.size() != R.n_t)
    throw StructuralError("coefficient count does not match generator count");
  Polynomial rep = Polynomial::zero(R.xt_ring);
  for (size_t j = 0; j < R.n_t; ++j) {
    if (coeffs[j] % R.xt_ring->p == 0) continue;
    rep = rep + Polynomial::variable(R.xt_ring, R.n_x + j).scaled(coeffs[j]);
  }
  return normal_form(rep, G.g_ideal);
}

RegularityCertificate is_g_regular_sequence(const std::vector<Polynomial>& reps,
                                            const GradedPresentation& G) {
  RegularityCertificate cert;
  Ideal prior = G.g_ideal;
  for (size_t i = 0; i < reps.size(); ++i) {
    require_same_ring(reps[i].ring(), G.rees.xt_ring);
    if (reps[i].is_zero() || prior.contains(reps[i])) {
      cert.regular = false;
      cert.witness = "1 (class " + std::to_string(i + 1) + " vanishes in G/(prior))";
      return cert;
    }
    Ideal colon = ideal_colon(prior, reps[i]);
    cert.colon_steps.push_back(colon.str());
    for (const Polynomial& g : colon.basis()) {
      if (!prior.contains(g)) {
        cert.regular = false;
        cert.witness = g.str();
        return cert;
      }
    }
    prior = ideal_sum(prior, {reps[i]});
  }
  cert.regular = true;
  return cert;
}

} // namespace vvlab
