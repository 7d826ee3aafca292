#include <doctest.h>

#include "vvlab/errors.hpp"
#include "vvlab/local_model.hpp"
#include "vvlab/parse.hpp"

using namespace vvlab;

TEST_CASE("regular ring model") {
  ModelPtr A = LocalRingModel::build(101, {"x", "y"}, {});
  CHECK(A->dim() == 2);
  CHECK(A->depth() == 2);
  CHECK(A->is_cohen_macaulay());
  CHECK(A->ring()->weights == std::vector<int64_t>{1, 1});
}

TEST_CASE("quasi-homogeneous curve is accepted with detected weights") {
  ModelPtr A = LocalRingModel::build(101, {"x", "y"}, {"y^3 - x^4"});
  CHECK(A->dim() == 1);
  CHECK(A->depth() == 1);
  CHECK(A->is_cohen_macaulay());
  CHECK(A->ring()->weights == std::vector<int64_t>{3, 4});
}

TEST_CASE("non-Cohen-Macaulay model is admitted but flagged") {
  ModelPtr A = LocalRingModel::build(101, {"x", "y"}, {"x y", "x^2"});
  CHECK(A->dim() == 1);
  CHECK(A->depth() == 0);
  CHECK_FALSE(A->is_cohen_macaulay());
}

TEST_CASE("model rejections") {
  CHECK_THROWS_AS(LocalRingModel::build(100, {"x"}, {}), InputError);
  CHECK_THROWS_AS(LocalRingModel::build(101, {"x", "x"}, {}), InputError);
  CHECK_THROWS_AS(LocalRingModel::build(101, {}, {}), InputError);
  // no positive weights can grade x^2 + y^3 + x^5
  CHECK_THROWS_AS(LocalRingModel::build(101, {"x", "y"}, {"x^2 + y^3 + x^5"}),
                  InputError);
  CHECK_THROWS_AS(LocalRingModel::build(101, {"x"}, {"5"}), InputError);
}

TEST_CASE("declare m-primary ideals") {
  ModelPtr A = LocalRingModel::build(32003, {"x", "y"}, {});
  auto P = [&](const char* s) { return parse_polynomial(A->ring(), s); };

  MPrimaryIdeal m = MPrimaryIdeal::declare(A, {P("x"), P("y")});
  CHECK(m.adic_bound() == 1);
  CHECK(m.colength() == 1);

  MPrimaryIdeal I = MPrimaryIdeal::declare(A, {P("x^2"), P("y^2")});
  CHECK(I.adic_bound() == 3);
  CHECK(I.colength() == 4);

  CHECK_THROWS_AS(MPrimaryIdeal::declare(A, {P("x")}), PreconditionError);
  CHECK_THROWS_AS(MPrimaryIdeal::declare(A, {P("x + 1")}), PreconditionError);
}

TEST_CASE("powers of declared ideals") {
  ModelPtr A = LocalRingModel::build(32003, {"x", "y"}, {});
  auto P = [&](const char* s) { return parse_polynomial(A->ring(), s); };
  MPrimaryIdeal m = MPrimaryIdeal::declare(A, {P("x"), P("y")});
  CHECK(m.power(0).is_unit());
  CHECK(m.power(3).same_ideal(
      Ideal(A->ring(), {P("x^3"), P("x^2 y"), P("x y^2"), P("y^3")})));

  MPrimaryIdeal I = MPrimaryIdeal::declare(A, {P("x^2"), P("y^2")});
  CHECK(I.power(2).same_ideal(Ideal(A->ring(), {P("x^4"), P("x^2 y^2"), P("y^4")})));
  // powers of an m-primary ideal revalidate as m-primary
  for (unsigned n = 1; n <= 14; ++n) {
    MPrimaryVerdict v = classify_m_primary(A, I.power(n));
    CHECK(v.kind == MPrimality::MPrimary);
  }
}

TEST_CASE("m-primality classification") {
  ModelPtr A = LocalRingModel::build(32003, {"x", "y"}, {});
  auto P = [&](const char* s) { return parse_polynomial(A->ring(), s); };
  CHECK(classify_m_primary(A, Ideal::unit(A->ring())).kind == MPrimality::Unit);
  MPrimaryVerdict m2 = classify_m_primary(A, A->ideal_in_A({P("x^2"), P("x y"), P("y^2")}));
  CHECK(m2.kind == MPrimality::MPrimary);
  CHECK(m2.adic_bound == 2);
  CHECK(classify_m_primary(A, A->ideal_in_A({P("x y")})).kind ==
        MPrimality::NotMPrimary);
}

TEST_CASE("relations are baked into every ideal of A") {
  ModelPtr A = LocalRingModel::build(32003, {"x", "y"}, {"y^3 - x^4"});
  auto P = [&](const char* s) { return parse_polynomial(A->ring(), s); };
  MPrimaryIdeal m = MPrimaryIdeal::declare(A, {P("x"), P("y")});
  // x^8 = y^6 mod J, so x^8 must be in (y^6) + J
  Ideal y6 = A->ideal_in_A({P("y^6")});
  CHECK(y6.contains(P("x^8")));
  CHECK(m.power(2).contains(P("y^3"))); // y^3 = x^4 in A
  // colengths follow the semigroup <3,4>: gaps 1,2,5 below the conductor
  CHECK(*A->ideal_in_A({P("x"), P("y")}).colength() == 1);
}

TEST_CASE("Hilbert-Samuel growth of power colengths") {
  ModelPtr A = LocalRingModel::build(32003, {"x", "y"}, {});
  auto P = [&](const char* s) { return parse_polynomial(A->ring(), s); };
  MPrimaryIdeal I = MPrimaryIdeal::declare(A, {P("x^2"), P("y^2")});
  std::vector<int64_t> cs;
  for (unsigned n = 1; n <= 8; ++n) {
    auto c = I.power(n).colength();
    REQUIRE(c.has_value());
    if (!cs.empty()) CHECK(static_cast<int64_t>(*c) > cs.back());
    cs.push_back(static_cast<int64_t>(*c));
  }
  // third differences of a degree-2 polynomial tail vanish
  std::vector<int64_t> diff = cs;
  for (int k = 0; k < 3; ++k)
    for (size_t t = diff.size(); t-- > 1;) diff[t] -= diff[t - 1];
  CHECK(diff[diff.size() - 1] == 0);
  CHECK(diff[diff.size() - 2] == 0);
  // e(I) = 4: second differences of the tail equal the multiplicity
  std::vector<int64_t> d2 = cs;
  for (int k = 0; k < 2; ++k)
    for (size_t t = d2.size(); t-- > 1;) d2[t] -= d2[t - 1];
  CHECK(d2.back() == 4);
}

TEST_CASE("adic bound is compatible with powers") {
  ModelPtr A = LocalRingModel::build(32003, {"x", "y"}, {});
  auto P = [&](const char* s) { return parse_polynomial(A->ring(), s); };
  MPrimaryIdeal I = MPrimaryIdeal::declare(A, {P("x^2"), P("y^2")});
  int N = I.adic_bound();
  for (unsigned n = 2; n <= 3; ++n) {
    Ideal In = I.power(n);
    for (const Monomial& mono :
         A->basis_monomials_of_degree(static_cast<uint64_t>(N) * n))
      CHECK(In.contains(Polynomial::monomial(A->ring(), mono, 1)));
  }
}
