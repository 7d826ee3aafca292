#include "vvlab/poly.hpp"

#include <algorithm>
#include <sstream>

#include "vvlab/errors.hpp"
#include "vvlab/field.hpp"

namespace vvlab {

void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (a.get() != b.get())
    throw StructuralError("operands live in different ambient rings");
}

void require_same_ring(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a.ring(), b.ring());
}

Polynomial::Polynomial(RingPtr ring, std::vector<Term> raw_terms)
    : ring_(std::move(ring)), terms_(std::move(raw_terms)) {
  normalize();
}

Polynomial Polynomial::constant(RingPtr ring, uint64_t c) {
  c %= ring->p;
  if (c == 0) return zero(std::move(ring));
  size_t n = ring->nvars();
  return Polynomial(std::move(ring), {Term{Monomial::one(n), c}});
}

Polynomial Polynomial::variable(RingPtr ring, size_t var, Exp power) {
  if (var >= ring->nvars()) throw StructuralError("variable index out of range");
  Monomial m(ring->nvars());
  m.e[var] = power;
  return Polynomial(std::move(ring), {Term{std::move(m), 1}});
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial m, uint64_t c) {
  c %= ring->p;
  if (c == 0) return zero(std::move(ring));
  return Polynomial(std::move(ring), {Term{std::move(m), c}});
}

const Term& Polynomial::lead() const {
  if (terms_.empty()) throw InternalError("leading term of zero polynomial");
  return terms_.front();
}

uint64_t Polynomial::total_degree() const {
  uint64_t d = 0;
  for (const Term& t : terms_) d = std::max(d, t.mon.total_degree());
  return d;
}

bool Polynomial::is_weighted_homogeneous() const {
  if (terms_.size() <= 1) return true;
  uint64_t d = vvlab::weighted_degree(terms_[0].mon, ring_->weights);
  for (size_t i = 1; i < terms_.size(); ++i)
    if (vvlab::weighted_degree(terms_[i].mon, ring_->weights) != d) return false;
  return true;
}

uint64_t Polynomial::weighted_degree() const {
  return vvlab::weighted_degree(lead().mon, ring_->weights);
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(inv_mod(lead().coeff, ring_->p));
}

void Polynomial::normalize() {
  uint64_t p = ring_->p;
  for (Term& t : terms_) t.coeff %= p;
  std::sort(terms_.begin(), terms_.end(), [&](const Term& a, const Term& b) {
    return mono_cmp(a.mon, b.mon, ring_->order) > 0;
  });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (Term& t : terms_) {
    if (!out.empty() && out.back().mon == t.mon)
      out.back().coeff = add_mod(out.back().coeff, t.coeff, p);
    else
      out.push_back(std::move(t));
    if (!out.empty() && out.back().coeff == 0) out.pop_back();
  }
  terms_ = std::move(out);
}

namespace {

// merge of two descending term lists, b scaled by c (and term-multiplied by m
// when mult is set)
std::vector<Term> merge_linear(const Polynomial& a, const Polynomial& b,
                               uint64_t c, const Term* mult, const RingPtr& ring) {
  uint64_t p = ring->p;
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  std::vector<Term> out;
  out.reserve(ta.size() + tb.size());
  size_t i = 0, j = 0;
  auto bmon = [&](size_t k) {
    return mult ? mono_mul(mult->mon, tb[k].mon) : tb[k].mon;
  };
  auto bcoeff = [&](size_t k) {
    uint64_t v = mul_mod(tb[k].coeff, c, p);
    if (mult) v = mul_mod(v, mult->coeff, p);
    return v;
  };
  while (i < ta.size() || j < tb.size()) {
    if (j >= tb.size()) {
      out.push_back(ta[i++]);
      continue;
    }
    Monomial mb = bmon(j);
    if (i >= ta.size()) {
      uint64_t v = bcoeff(j);
      if (v) out.push_back(Term{std::move(mb), v});
      ++j;
      continue;
    }
    int cmp = mono_cmp(ta[i].mon, mb, ring->order);
    if (cmp > 0) {
      out.push_back(ta[i++]);
    } else if (cmp < 0) {
      uint64_t v = bcoeff(j);
      if (v) out.push_back(Term{std::move(mb), v});
      ++j;
    } else {
      uint64_t v = add_mod(ta[i].coeff, bcoeff(j), p);
      if (v) out.push_back(Term{ta[i].mon, v});
      ++i;
      ++j;
    }
  }
  return out;
}

} // namespace

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a, b);
  Polynomial r(a.ring());
  r.terms_ = merge_linear(a, b, 1, nullptr, a.ring());
  return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a, b);
  Polynomial r(a.ring());
  r.terms_ = merge_linear(a, b, a.ring()->p - 1, nullptr, a.ring());
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a, b);
  const RingPtr& ring = a.ring();
  uint64_t p = ring->p;
  std::vector<Term> acc;
  for (const Term& t : a.terms()) {
    std::vector<Term> part;
    part.reserve(b.terms().size());
    for (const Term& u : b.terms())
      part.push_back(Term{mono_mul(t.mon, u.mon), mul_mod(t.coeff, u.coeff, p)});
    for (Term& x : part) acc.push_back(std::move(x));
  }
  return Polynomial(ring, std::move(acc));
}

Polynomial Polynomial::operator-() const {
  return scaled(ring_ ? ring_->p - 1 : 0);
}

Polynomial Polynomial::sub_term_mul(const Term& t, const Polynomial& g) const {
  require_same_ring(*this, g);
  Term neg{t.mon, neg_mod(t.coeff % ring_->p, ring_->p)};
  Polynomial r(ring_);
  r.terms_ = merge_linear(*this, g, 1, &neg, ring_);
  return r;
}

Polynomial Polynomial::scaled(uint64_t c) const {
  uint64_t p = ring_->p;
  c %= p;
  if (c == 0) return zero(ring_);
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_)
    r.terms_.push_back(Term{t.mon, mul_mod(t.coeff, c, p)});
  return r;
}

Polynomial Polynomial::times_term(const Term& t) const {
  uint64_t p = ring_->p;
  uint64_t c = t.coeff % p;
  if (c == 0) return zero(ring_);
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const Term& u : terms_)
    r.terms_.push_back(Term{mono_mul(t.mon, u.mon), mul_mod(u.coeff, c, p)});
  return r;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Term& t : terms_) {
    if (!first) os << " + ";
    first = false;
    bool printed = false;
    if (t.coeff != 1 || t.mon.is_one()) {
      os << t.coeff;
      printed = true;
    }
    for (size_t v = 0; v < t.mon.e.size(); ++v) {
      if (t.mon.e[v] == 0) continue;
      if (printed) os << "*";
      os << ring_->var_names[v];
      if (t.mon.e[v] > 1) os << "^" << t.mon.e[v];
      printed = true;
    }
  }
  return os.str();
}

Polynomial map_poly(const Polynomial& f, const RingPtr& target,
                    const std::vector<size_t>& var_map) {
  if (f.ring()->p != target->p)
    throw StructuralError("cannot map between rings of different characteristic");
  std::vector<Term> out;
  out.reserve(f.terms().size());
  for (const Term& t : f.terms()) {
    Monomial m(target->nvars());
    for (size_t v = 0; v < t.mon.e.size(); ++v) {
      if (t.mon.e[v] == 0) continue;
      if (var_map[v] >= target->nvars())
        throw StructuralError("variable map out of range");
      m.e[var_map[v]] += t.mon.e[v];
    }
    out.push_back(Term{std::move(m), t.coeff});
  }
  return Polynomial(target, std::move(out));
}

std::string render_poly_list(const std::vector<Polynomial>& v, const char* sep) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << sep;
    os << v[i].str();
  }
  return os.str();
}

} // namespace vvlab
