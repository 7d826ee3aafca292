#include "vvlab/local_model.hpp"

#include <algorithm>
#include <numeric>

#include "vvlab/errors.hpp"
#include "vvlab/field.hpp"
#include "vvlab/hilbert.hpp"
#include "vvlab/parse.hpp"

namespace vvlab {

namespace {

bool isobaric(const Polynomial& f, const std::vector<int64_t>& w) {
  if (f.terms().size() <= 1) return true;
  uint64_t d = weighted_degree(f.terms()[0].mon, w);
  for (size_t i = 1; i < f.terms().size(); ++i)
    if (weighted_degree(f.terms()[i].mon, w) != d) return false;
  return true;
}

// smallest positive weight vector (by sum, then lex) making every relation
// isobaric; standard grading is tried first
std::vector<int64_t> detect_weights(size_t n,
                                    const std::vector<Polynomial>& relations) {
  std::vector<int64_t> ones(n, 1);
  auto all_ok = [&](const std::vector<int64_t>& w) {
    for (const Polynomial& f : relations)
      if (!isobaric(f, w)) return false;
    return true;
  };
  if (all_ok(ones)) return ones;
  if (n > 4)
    throw InputError(
        "relations are not graded and weight search is limited to 4 variables");
  const int64_t wmax = 24;
  std::vector<int64_t> w(n, 1);
  // enumerate by total sum so the first hit is minimal
  for (int64_t total = static_cast<int64_t>(n); total <= wmax * static_cast<int64_t>(n);
       ++total) {
    std::vector<int64_t> cur(n, 1);
    // compositions of `total` into n parts in [1, wmax], lexicographic
    std::function<bool(size_t, int64_t)> rec = [&](size_t i, int64_t rem) -> bool {
      if (i + 1 == n) {
        if (rem < 1 || rem > wmax) return false;
        cur[i] = rem;
        if (all_ok(cur)) return true;
        return false;
      }
      for (int64_t v = 1; v <= std::min<int64_t>(wmax, rem - static_cast<int64_t>(n - i - 1));
           ++v) {
        cur[i] = v;
        if (rec(i + 1, rem - v)) return true;
      }
      return false;
    };
    if (rec(0, total)) {
      int64_t g = 0;
      for (int64_t v : cur) g = std::gcd(g, v);
      for (int64_t& v : cur) v /= g;
      return cur;
    }
  }
  throw InputError("relations are not homogeneous for any positive weights <= 24");
}

} // namespace

ModelPtr LocalRingModel::build(uint64_t p, const std::vector<std::string>& vars,
                               const std::vector<std::string>& relation_strs) {
  if (!is_prime(p)) throw InputError("characteristic must be prime");
  if (vars.empty()) throw InputError("at least one variable is required");
  for (size_t i = 0; i < vars.size(); ++i) {
    if (vars[i].empty() || std::isdigit(static_cast<unsigned char>(vars[i][0])) ||
        vars[i].find_first_of("+-*^ \t@") != std::string::npos)
      throw InputError("invalid variable name: \"" + vars[i] + "\"");
    for (size_t j = i + 1; j < vars.size(); ++j)
      if (vars[i] == vars[j]) throw InputError("duplicate variable: " + vars[i]);
  }
  RingPtr plain = make_ring(p, vars);
  std::vector<Polynomial> rels;
  for (const std::string& s : relation_strs) {
    Polynomial f = parse_polynomial(plain, s);
    if (!f.is_zero()) rels.push_back(std::move(f));
  }
  return build_from_polys(plain, rels);
}

ModelPtr LocalRingModel::build_from_polys(RingPtr plain,
                                          const std::vector<Polynomial>& rels_in) {
  std::vector<int64_t> w = detect_weights(plain->nvars(), rels_in);
  RingPtr ring = make_ring(plain->p, plain->var_names, w);
  std::vector<size_t> identity(plain->nvars());
  for (size_t i = 0; i < identity.size(); ++i) identity[i] = i;
  std::vector<Polynomial> rels;
  for (const Polynomial& f : rels_in) {
    Polynomial g = map_poly(f, ring, identity);
    if (g.is_constant() && !g.is_zero())
      throw InputError("relations generate the unit ideal");
    rels.push_back(std::move(g));
  }

  auto model = std::shared_ptr<LocalRingModel>(new LocalRingModel());
  model->ring_ = ring;
  model->relations_ = Ideal(ring, rels);
  if (model->relations_.is_unit())
    throw InputError("relations generate the unit ideal");
  model->dim_ = model->relations_.krull_dim();
  BettiTable b = min_free_resolution(cyclic_presentation(model->relations_));
  model->depth_ = static_cast<int>(ring->nvars()) - b.projective_dimension;
  model->cm_ = (model->dim_ == model->depth_);
  return model;
}

Ideal LocalRingModel::maximal_ideal() const {
  std::vector<Polynomial> gens;
  for (size_t v = 0; v < ring_->nvars(); ++v)
    gens.push_back(Polynomial::variable(ring_, v));
  for (const Polynomial& g : relations_.gens()) gens.push_back(g);
  return Ideal(ring_, std::move(gens));
}

Ideal LocalRingModel::ideal_in_A(std::vector<Polynomial> gens) const {
  for (const Polynomial& g : relations_.gens()) gens.push_back(g);
  return Ideal(ring_, std::move(gens));
}

Polynomial LocalRingModel::reduce(const Polynomial& f) const {
  return normal_form(f, relations_);
}

std::vector<Monomial> LocalRingModel::basis_monomials_of_degree(uint64_t d) const {
  std::vector<Monomial> leads;
  for (const Polynomial& g : relations_.basis()) leads.push_back(g.lead().mon);
  return standard_monomials_of_degree(leads, ring_->nvars(), d);
}

std::string MPrimaryVerdict::str() const {
  switch (kind) {
  case MPrimality::Unit:
    return "unit";
  case MPrimality::MPrimary:
    return "m-primary(N=" + std::to_string(adic_bound) + ")";
  default:
    return "not m-primary";
  }
}

namespace {

bool contains_m_power(const ModelPtr& A, const Ideal& handle, uint64_t n) {
  for (const Monomial& m : A->basis_monomials_of_degree(n)) {
    Polynomial f = Polynomial::monomial(A->ring(), m, 1);
    if (!handle.contains(f)) return false;
  }
  return true;
}

} // namespace

MPrimaryVerdict classify_m_primary(const ModelPtr& A, const Ideal& handle) {
  MPrimaryVerdict v;
  if (handle.is_unit()) {
    v.kind = MPrimality::Unit;
    return v;
  }
  auto c = handle.colength();
  if (!c) {
    v.kind = MPrimality::NotMPrimary;
    return v;
  }
  uint64_t bound = *c + 1;
  for (uint64_t n = 1; n <= bound; ++n) {
    if (contains_m_power(A, handle, n)) {
      v.kind = MPrimality::MPrimary;
      v.adic_bound = static_cast<int>(n);
      return v;
    }
  }
  throw InternalError("finite colength but no m-power found within the bound");
}

MPrimaryIdeal MPrimaryIdeal::declare(ModelPtr A, std::vector<Polynomial> gens,
                                     int power_cache_bound) {
  MPrimaryIdeal I;
  I.A_ = A;
  for (const Polynomial& g : gens) require_same_ring(A->ring(), g.ring());
  I.gens_ = gens;
  I.handle_ = A->ideal_in_A(std::move(gens));
  MPrimaryVerdict v = classify_m_primary(A, I.handle_);
  if (v.kind == MPrimality::Unit)
    throw PreconditionError("the unit ideal is not m-primary");
  if (v.kind == MPrimality::NotMPrimary)
    throw PreconditionError("ideal is not m-primary: colength is infinite");
  I.colength_ = *I.handle_.colength();
  I.adic_bound_ = v.adic_bound;
  I.cache_bound_ = power_cache_bound;
  I.cache_ = std::make_shared<Cache>();
  return I;
}

Ideal MPrimaryIdeal::power(unsigned n) const {
  if (n == 0) return Ideal::unit(A_->ring());
  if (n == 1) return handle_;
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->powers.find(n);
    if (it != cache_->powers.end()) return it->second;
  }
  // (I^{n-1} + J)(I + J) + J has the same preimage as I^n + J
  Ideal prev = power(n - 1);
  std::vector<Polynomial> gens;
  for (const Polynomial& f : prev.basis())
    for (const Polynomial& g : handle_.basis()) gens.push_back(f * g);
  for (const Polynomial& g : A_->relations().gens()) gens.push_back(g);
  Ideal result(A_->ring(), std::move(gens));
  if (n <= static_cast<unsigned>(cache_bound_)) {
    std::lock_guard<std::mutex> lock(cache_->mu);
    cache_->powers.emplace(n, result);
  }
  return result;
}

} // namespace vvlab
