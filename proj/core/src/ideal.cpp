#include "vvlab/ideal.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "vvlab/errors.hpp"
#include "vvlab/groebner.hpp"
#include "vvlab/hilbert.hpp"

namespace vvlab {

struct Ideal::State {
  RingPtr ring;
  std::vector<Polynomial> gens;

  mutable std::mutex mu;
  mutable bool has_gb = false;
  mutable std::vector<Polynomial> gb;
  mutable bool has_colength = false;
  mutable std::optional<uint64_t> colength;
};

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens) {
  if (!ring) throw StructuralError("ideal requires an ambient ring");
  for (const Polynomial& g : gens)
    if (!g.is_zero()) require_same_ring(ring, g.ring());
  s_ = std::make_shared<State>();
  s_->ring = std::move(ring);
  for (Polynomial& g : gens)
    if (!g.is_zero()) s_->gens.push_back(std::move(g));
}

Ideal Ideal::unit(RingPtr ring) {
  Polynomial one = Polynomial::constant(ring, 1);
  return Ideal(std::move(ring), {std::move(one)});
}

Ideal Ideal::span(std::vector<Polynomial> gens) {
  for (const Polynomial& g : gens)
    if (!g.is_zero()) return Ideal(g.ring(), std::move(gens));
  throw StructuralError("cannot infer ring from zero generators");
}

const RingPtr& Ideal::ring() const {
  if (!s_) throw StructuralError("empty ideal handle");
  return s_->ring;
}

const std::vector<Polynomial>& Ideal::gens() const {
  if (!s_) throw StructuralError("empty ideal handle");
  return s_->gens;
}

const std::vector<Polynomial>& Ideal::basis() const {
  if (!s_) throw StructuralError("empty ideal handle");
  std::lock_guard<std::mutex> lock(s_->mu);
  if (!s_->has_gb) {
    s_->gb = s_->gens.empty() ? std::vector<Polynomial>{}
                              : groebner_basis(s_->gens);
    s_->has_gb = true;
  }
  return s_->gb;
}

std::vector<Monomial> Ideal::lead_monomials() const {
  std::vector<Monomial> out;
  for (const Polynomial& g : basis()) out.push_back(g.lead().mon);
  return out;
}

bool Ideal::contains(const Polynomial& f) const {
  require_same_ring(ring(), f.ring());
  return normal_form(f, basis()).is_zero();
}

bool Ideal::contains(const Ideal& other) const {
  require_same_ring(ring(), other.ring());
  for (const Polynomial& g : other.basis())
    if (!contains(g)) return false;
  return true;
}

bool Ideal::is_unit() const {
  const auto& b = basis();
  return b.size() == 1 && b[0].is_constant() && !b[0].is_zero();
}

bool Ideal::is_zero_ideal() const { return basis().empty(); }

bool Ideal::same_ideal(const Ideal& o) const {
  require_same_ring(ring(), o.ring());
  const auto& a = basis();
  const auto& b = o.basis();
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == b[i])) return false;
  return true;
}

std::optional<uint64_t> Ideal::colength() const {
  if (!s_) throw StructuralError("empty ideal handle");
  const auto& b = basis();
  std::lock_guard<std::mutex> lock(s_->mu);
  if (!s_->has_colength) {
    std::vector<Monomial> leads;
    leads.reserve(b.size());
    for (const Polynomial& g : b) leads.push_back(g.lead().mon);
    auto sm = standard_monomials(leads, s_->ring->nvars());
    s_->colength =
        sm ? std::optional<uint64_t>(sm->size()) : std::optional<uint64_t>{};
    s_->has_colength = true;
  }
  return s_->colength;
}

std::vector<Monomial> Ideal::quotient_basis() const {
  std::vector<Monomial> leads = lead_monomials();
  auto sm = standard_monomials(leads, ring()->nvars());
  if (!sm) throw PreconditionError("quotient is not finite-dimensional");
  std::sort(sm->begin(), sm->end(), [&](const Monomial& a, const Monomial& b) {
    return mono_cmp(a, b, ring()->order) < 0;
  });
  return *sm;
}

int Ideal::krull_dim() const {
  return monomial_krull_dim(lead_monomials(), ring()->nvars());
}

std::string Ideal::str() const {
  const auto& b = basis();
  if (b.empty()) return "(0)";
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < b.size(); ++i) {
    if (i) os << ", ";
    os << b[i].str();
  }
  os << ")";
  return os.str();
}

Polynomial normal_form(const Polynomial& f, const Ideal& I) {
  require_same_ring(f.ring(), I.ring());
  return normal_form(f, I.basis());
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Polynomial> gens = a.gens();
  gens.insert(gens.end(), b.gens().begin(), b.gens().end());
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_sum(const Ideal& a, const std::vector<Polynomial>& extra) {
  std::vector<Polynomial> gens = a.gens();
  gens.insert(gens.end(), extra.begin(), extra.end());
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Polynomial> gens;
  for (const Polynomial& f : a.basis())
    for (const Polynomial& g : b.basis()) gens.push_back(f * g);
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_power(const Ideal& a, unsigned n) {
  if (n == 0) return Ideal::unit(a.ring());
  Ideal acc = a;
  for (unsigned k = 1; k < n; ++k) acc = ideal_product(acc, a);
  return acc;
}

namespace {

// maps into a ring with `extra` fresh lead-block variables in front
struct Tagged {
  RingPtr ext;
  std::vector<size_t> up;   // source var i -> ext index
  std::vector<size_t> down; // ext index -> source var (offset by extra)
};

Tagged tag_ring(const RingPtr& ring, size_t extra) {
  if (ring->order.block_split != 0)
    throw InternalError("nested elimination rings are not supported");
  std::vector<std::string> fresh;
  for (size_t k = 0; k < extra; ++k)
    fresh.push_back("@e" + std::to_string(k));
  Tagged t;
  t.ext = extend_front(ring, fresh);
  t.up.resize(ring->nvars());
  for (size_t i = 0; i < ring->nvars(); ++i) t.up[i] = i + extra;
  t.down.resize(ring->nvars());
  for (size_t i = 0; i < ring->nvars(); ++i) t.down[i] = i;
  return t;
}

bool uses_vars(const Polynomial& f, size_t lo, size_t hi) {
  for (const Term& t : f.terms())
    for (size_t v = lo; v < hi; ++v)
      if (t.mon.e[v]) return true;
  return false;
}

// project an @-free polynomial of the tagged ring back to the source ring
Polynomial project_down(const Polynomial& f, const RingPtr& src, size_t extra) {
  std::vector<Term> out;
  out.reserve(f.terms().size());
  for (const Term& t : f.terms()) {
    Monomial m(src->nvars());
    for (size_t v = extra; v < t.mon.e.size(); ++v) m.e[v - extra] = t.mon.e[v];
    out.push_back(Term{std::move(m), t.coeff});
  }
  return Polynomial(src, std::move(out));
}

} // namespace

Ideal ideal_intersect(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  const RingPtr& ring = a.ring();
  Tagged tg = tag_ring(ring, 1);
  Polynomial t = Polynomial::variable(tg.ext, 0);
  Polynomial one_minus_t = Polynomial::constant(tg.ext, 1) - t;
  std::vector<Polynomial> gens;
  for (const Polynomial& f : a.basis()) gens.push_back(t * map_poly(f, tg.ext, tg.up));
  for (const Polynomial& g : b.basis())
    gens.push_back(one_minus_t * map_poly(g, tg.ext, tg.up));
  std::vector<Polynomial> out;
  for (const Polynomial& h : groebner_basis(gens))
    if (!uses_vars(h, 0, 1)) out.push_back(project_down(h, ring, 1));
  return Ideal(ring, std::move(out));
}

Ideal ideal_colon(const Ideal& a, const Polynomial& f) {
  require_same_ring(a.ring(), f.ring());
  if (f.is_zero()) throw StructuralError("colon by zero element");
  Ideal inter = ideal_intersect(a, Ideal(a.ring(), {f}));
  std::vector<Polynomial> gens;
  for (const Polynomial& g : inter.basis()) gens.push_back(exact_divide(g, f));
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_colon(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  if (b.is_zero_ideal()) return Ideal::unit(a.ring());
  Ideal acc;
  bool first = true;
  for (const Polynomial& f : b.basis()) {
    Ideal c = ideal_colon(a, f);
    acc = first ? c : ideal_intersect(acc, c);
    first = false;
  }
  return acc;
}

Ideal ideal_saturate(const Ideal& a, const Ideal& b) {
  Ideal cur = a;
  for (;;) {
    Ideal next = ideal_colon(cur, b);
    if (next.same_ideal(cur)) return cur;
    cur = next;
  }
}

Ideal ideal_eliminate(const Ideal& a, const std::vector<size_t>& vars) {
  const RingPtr& ring = a.ring();
  size_t n = ring->nvars();
  std::vector<bool> drop(n, false);
  for (size_t v : vars) {
    if (v >= n) throw StructuralError("eliminate: variable index out of range");
    drop[v] = true;
  }
  // permuted ring: eliminated variables first, as the lead block
  std::vector<std::string> names;
  std::vector<int64_t> weights;
  std::vector<size_t> up(n);
  size_t pos = 0;
  for (size_t v = 0; v < n; ++v)
    if (drop[v]) {
      names.push_back(ring->var_names[v]);
      weights.push_back(ring->weights[v]);
      up[v] = pos++;
    }
  size_t split = pos;
  for (size_t v = 0; v < n; ++v)
    if (!drop[v]) {
      names.push_back(ring->var_names[v]);
      weights.push_back(ring->weights[v]);
      up[v] = pos++;
    }
  MonomialOrder ord;
  ord.block_split = static_cast<int>(split);
  RingPtr ext = make_ring(ring->p, names, weights, ord);

  std::vector<Polynomial> gens;
  for (const Polynomial& f : a.gens()) gens.push_back(map_poly(f, ext, up));
  std::vector<size_t> down(n);
  for (size_t v = 0; v < n; ++v) down[up[v]] = v;
  std::vector<Polynomial> out;
  for (const Polynomial& h : groebner_basis(gens)) {
    if (uses_vars(h, 0, split)) continue;
    // map back on original indices
    std::vector<Term> terms;
    for (const Term& t : h.terms()) {
      Monomial m(n);
      for (size_t v = split; v < n; ++v) m.e[down[v]] = t.mon.e[v];
      terms.push_back(Term{std::move(m), t.coeff});
    }
    out.push_back(Polynomial(ring, std::move(terms)));
  }
  return Ideal(ring, std::move(out));
}

} // namespace vvlab
