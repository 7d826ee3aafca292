#include <doctest.h>

#include "vvlab/errors.hpp"
#include "vvlab/field.hpp"
#include "vvlab/groebner.hpp"
#include "vvlab/hilbert.hpp"
#include "vvlab/ideal.hpp"
#include "vvlab/parse.hpp"
#include "vvlab/rng.hpp"

using namespace vvlab;

namespace {

RingPtr ring2() {
  static RingPtr r = make_ring(32003, {"x", "y"});
  return r;
}

Polynomial P(const char* s) { return parse_polynomial(ring2(), s); }

Polynomial P(const RingPtr& r, const char* s) { return parse_polynomial(r, s); }

// S-polynomial fixpoint oracle: a set is a Groebner basis iff every S-pair
// reduces to zero against it; membership of the inputs closes the check.
bool is_groebner_for(const std::vector<Polynomial>& claimed,
                     const std::vector<Polynomial>& inputs) {
  for (size_t i = 0; i < claimed.size(); ++i)
    for (size_t j = i + 1; j < claimed.size(); ++j)
      if (!normal_form(s_polynomial(claimed[i], claimed[j]), claimed).is_zero())
        return false;
  for (const Polynomial& f : inputs)
    if (!normal_form(f, claimed).is_zero()) return false;
  // and the claimed elements lie in the input ideal
  for (const Polynomial& g : claimed) {
    auto coeffs = lift_membership(g, inputs); // throws if not a member
    Polynomial acc = Polynomial::zero(g.ring());
    for (size_t k = 0; k < inputs.size(); ++k) acc = acc + coeffs[k] * inputs[k];
    if (!(acc == g)) return false;
  }
  return true;
}

// brute-force standard monomial count: enumerate degree by degree until the
// first empty layer (upward-closed divisibility makes that a proof of
// termination), bailing out as infinite past a generous cap
std::optional<uint64_t> brute_force_colength(const std::vector<Monomial>& leads,
                                             size_t nvars, uint64_t cap = 64) {
  uint64_t total = 0;
  for (uint64_t d = 0;; ++d) {
    if (d > cap) return std::nullopt;
    uint64_t layer = standard_monomials_of_degree(leads, nvars, d).size();
    if (layer == 0) return total;
    total += layer;
  }
}

} // namespace

TEST_CASE("modular field arithmetic") {
  uint64_t p = 32003;
  CHECK(is_prime(p));
  CHECK_FALSE(is_prime(32001));
  for (uint64_t a : {1ull, 2ull, 31999ull, 17ull})
    CHECK(mul_mod(a, inv_mod(a, p), p) == 1);
  CHECK(pow_mod(5, p - 1, p) == 1);
}

TEST_CASE("polynomial parsing and rendering") {
  CHECK(P("x^2*y + 7").str() == "x^2*y + 7");
  CHECK(P("3x y^2").str() == "3*x*y^2");            // optional '*'
  CHECK(P("y^3 - x^4").str() == "32002*x^4 + y^3"); // descending terms, coeff in [0,p)
  CHECK(P("x - x").is_zero());
  CHECK(P("2 3 x").str() == "6*x");
  CHECK_THROWS_AS(P("x + z"), InputError);
  CHECK_THROWS_AS(P("x ^"), InputError);
  CHECK_THROWS_AS(P(""), InputError);
}

TEST_CASE("polynomial arithmetic is exact") {
  Polynomial f = P("x^2 + y");
  Polynomial g = P("x - y^3");
  CHECK((f * g - g * f).is_zero());
  CHECK(((f + g) - f - g).is_zero());
  CHECK((f * (g + g) - f * g - f * g).is_zero());
  CHECK_THROWS_AS(f + P(make_ring(101, {"x", "y"}), "x"), StructuralError);
}

TEST_CASE("groebner basis examples") {
  // already reduced
  Ideal a(ring2(), {P("x^2"), P("y^2")});
  CHECK(a.basis().size() == 2);
  CHECK(a.same_ideal(Ideal(ring2(), {P("y^2"), P("x^2")})));

  // duplicate collapse
  Ideal b(ring2(), {P("x"), P("x")});
  CHECK(b.basis().size() == 1);
  CHECK(b.basis()[0].str() == "x");

  // the degrevlex basis of (xy, y^2 - x^3), frozen from the S-pair oracle
  std::vector<Polynomial> inputs = {P("x y"), P("y^2 - x^3")};
  Ideal c(ring2(), inputs);
  CHECK(is_groebner_for(c.basis(), inputs));
  CHECK(c.same_ideal(Ideal(ring2(), {P("x y"), P("y^3"), P("x^3 - y^2")})));
  CHECK(c.basis().size() == 3);
}

TEST_CASE("groebner idempotence and membership soundness") {
  Rng rng(20240809);
  RingPtr r3 = make_ring(32003, {"x", "y", "z"});
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Polynomial> gens;
    size_t ngens = 2 + rng.below(3);
    for (size_t k = 0; k < ngens; ++k) {
      std::vector<Term> terms;
      size_t nterms = 1 + rng.below(4);
      for (size_t t = 0; t < nterms; ++t) {
        Monomial m(3);
        for (size_t v = 0; v < 3; ++v) m.e[v] = static_cast<Exp>(rng.below(4));
        terms.push_back(Term{std::move(m), rng.below(32003)});
      }
      gens.push_back(Polynomial(r3, std::move(terms)));
    }
    Ideal I(r3, gens);
    if (I.is_zero_ideal()) continue;
    // idempotence: GB(GB(G)) = GB(G) elementwise
    std::vector<Polynomial> again = groebner_basis(I.basis());
    REQUIRE(again.size() == I.basis().size());
    for (size_t k = 0; k < again.size(); ++k) CHECK(again[k] == I.basis()[k]);
    // membership: random combinations stay inside
    Polynomial f = Polynomial::zero(r3), g = Polynomial::zero(r3);
    for (const Polynomial& gen : I.gens()) {
      f = f + gen.scaled(rng.below(32003));
      g = g + gen.scaled(rng.below(32003));
    }
    Monomial hm(3);
    hm.e[rng.below(3)] = 1 + static_cast<Exp>(rng.below(2));
    Polynomial h = Polynomial::monomial(r3, hm, 1 + rng.below(32002));
    CHECK(I.contains(f + g));
    CHECK(I.contains(h * f));
  }
}

TEST_CASE("ideal operations") {
  Ideal x(ring2(), {P("x")});
  Ideal y(ring2(), {P("y")});
  CHECK(ideal_intersect(x, y).same_ideal(Ideal(ring2(), {P("x y")})));

  Ideal xy(ring2(), {P("x y")});
  CHECK(ideal_colon(xy, x).same_ideal(y));

  Ideal m(ring2(), {P("x"), P("y")});
  CHECK(ideal_power(m, 2).same_ideal(Ideal(ring2(), {P("x^2"), P("x y"), P("y^2")})));
  CHECK(ideal_power(m, 0).is_unit());

  Ideal q(ring2(), {P("x^2 y"), P("x y^2")});
  CHECK(ideal_saturate(q, m).same_ideal(xy));

  Ideal e(ring2(), {P("x^2 - y"), P("x^3")});
  CHECK(ideal_eliminate(e, {0}).same_ideal(Ideal(ring2(), {P("y^2")})));

  Ideal zero = Ideal::zero(ring2());
  CHECK(ideal_intersect(zero, m).is_zero_ideal());
  CHECK(ideal_colon(m, Ideal::zero(ring2())).is_unit());
}

TEST_CASE("intersection and colon containments (property)") {
  Rng rng(5150);
  for (int trial = 0; trial < 12; ++trial) {
    auto rand_ideal = [&]() {
      std::vector<Polynomial> gens;
      size_t ngens = 1 + rng.below(3);
      for (size_t k = 0; k < ngens; ++k) {
        std::vector<Term> terms;
        size_t nterms = 1 + rng.below(3);
        for (size_t t = 0; t < nterms; ++t) {
          Monomial mm(2);
          mm.e[0] = static_cast<Exp>(rng.below(4));
          mm.e[1] = static_cast<Exp>(rng.below(4));
          terms.push_back(Term{std::move(mm), rng.below(32003)});
        }
        gens.push_back(Polynomial(ring2(), std::move(terms)));
      }
      return Ideal(ring2(), std::move(gens));
    };
    Ideal U = rand_ideal(), W = rand_ideal();
    if (U.is_zero_ideal() || W.is_zero_ideal()) continue;
    Ideal inter = ideal_intersect(U, W);
    CHECK(U.contains(inter));
    CHECK(W.contains(inter));
    Ideal colon = ideal_colon(W, U);
    for (const Polynomial& c : colon.basis())
      for (const Polynomial& u : U.basis()) CHECK(W.contains(c * u));
  }
}

TEST_CASE("colength examples") {
  CHECK(*Ideal(ring2(), {P("x"), P("y")}).colength() == 1);
  CHECK(*Ideal(ring2(), {P("x^2"), P("y^2")}).colength() == 4);
  CHECK_FALSE(Ideal(ring2(), {P("x")}).colength().has_value());

  // brute-force oracle for the corpus ideal: enumerate by degree
  Ideal I4(ring2(), {P("x^4"), P("x^3 y"), P("x y^3"), P("y^4")});
  auto oracle = brute_force_colength(I4.lead_monomials(), 2);
  REQUIRE(oracle.has_value());
  CHECK(*oracle == 11);
  CHECK(*I4.colength() == 11);
}

TEST_CASE("colength matches brute force on random monomial ideals") {
  Rng rng(777);
  RingPtr r1 = make_ring(32003, {"x"});
  RingPtr r3 = make_ring(32003, {"x", "y", "z"});
  for (int trial = 0; trial < 60; ++trial) {
    size_t nv = 1 + rng.below(3);
    RingPtr r = nv == 1 ? r1 : nv == 2 ? ring2() : r3;
    std::vector<Polynomial> gens;
    size_t ngens = 1 + rng.below(5);
    for (size_t k = 0; k < ngens; ++k) {
      Monomial m(nv);
      uint64_t deg = 0;
      for (size_t v = 0; v < nv; ++v) {
        uint64_t room = 8 - deg;
        m.e[v] = static_cast<Exp>(rng.below(room + 1));
        deg += m.e[v];
      }
      if (m.is_one()) continue;
      gens.push_back(Polynomial::monomial(r, std::move(m), 1));
    }
    if (gens.empty()) continue;
    Ideal I(r, gens);
    auto fast = I.colength();
    auto slow = brute_force_colength(I.lead_monomials(), nv);
    CHECK(fast == slow);
  }
}

TEST_CASE("exact division and lift") {
  Polynomial f = P("x^2 + y");
  Polynomial g = P("x - y^2");
  CHECK((exact_divide(f * g, g) == f));
  CHECK_THROWS_AS(exact_divide(P("x^2 + 1"), P("x")), StructuralError);

  std::vector<Polynomial> gens = {P("x^2"), P("x y + y^3")};
  Polynomial member = P("y") * gens[0] + P("x - 1") * gens[1];
  auto coeffs = lift_membership(member, gens);
  Polynomial acc = Polynomial::zero(ring2());
  for (size_t k = 0; k < gens.size(); ++k) acc = acc + coeffs[k] * gens[k];
  CHECK(acc == member);
  CHECK_THROWS_AS(lift_membership(P("y"), gens), PreconditionError);
}

TEST_CASE("mixed rings are rejected") {
  RingPtr other = make_ring(32003, {"x", "y"});
  CHECK_THROWS_AS(Ideal(ring2(), {P(other, "x")}), StructuralError);
  CHECK_THROWS_AS(ideal_sum(Ideal(ring2(), {P("x")}), Ideal(other, {P(other, "x")})),
                  StructuralError);
}
