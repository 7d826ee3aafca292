#include <doctest.h>

#include "vvlab/blowup.hpp"
#include "vvlab/errors.hpp"
#include "vvlab/parse.hpp"
#include "vvlab/superficial.hpp"
#include "vvlab/vv.hpp"

using namespace vvlab;

namespace {

ModelPtr regular2() {
  static ModelPtr A = LocalRingModel::build(32003, {"x", "y"}, {});
  return A;
}

Polynomial P(const ModelPtr& A, const char* s) {
  return parse_polynomial(A->ring(), s);
}

Polynomial Pxt(const ReesPresentation& R, const char* s) {
  return parse_polynomial(R.xt_ring, s);
}

} // namespace

TEST_CASE("Rees presentation of the maximal ideal") {
  ModelPtr A = regular2();
  MPrimaryIdeal m = MPrimaryIdeal::declare(A, {P(A, "x"), P(A, "y")});
  ReesPresentation R = rees_presentation(m); // substitution check runs inside
  CHECK(R.n_x == 2);
  CHECK(R.n_t == 2);
  CHECK(R.t_weights_graded);
  CHECK(R.rees_ideal.same_ideal(
      Ideal(R.xt_ring, {Pxt(R, "x T2 - y T1")})));
}

TEST_CASE("Rees presentation of a principal ideal is free") {
  ModelPtr A = LocalRingModel::build(32003, {"x"}, {});
  MPrimaryIdeal I = MPrimaryIdeal::declare(A, {parse_polynomial(A->ring(), "x")});
  ReesPresentation R = rees_presentation(I);
  CHECK(R.rees_ideal.is_zero_ideal());
}

TEST_CASE("Rees presentation of a complete intersection") {
  ModelPtr A = regular2();
  MPrimaryIdeal I = MPrimaryIdeal::declare(A, {P(A, "x^2"), P(A, "y^2")});
  ReesPresentation R = rees_presentation(I);
  CHECK(R.rees_ideal.same_ideal(Ideal(R.xt_ring, {Pxt(R, "x^2 T2 - y^2 T1")})));
}

TEST_CASE("associated graded of the maximal ideal is polynomial") {
  ModelPtr A = regular2();
  MPrimaryIdeal m = MPrimaryIdeal::declare(A, {P(A, "x"), P(A, "y")});
  GradedPresentation G = assoc_graded_presentation(m); // Hilbert check inside
  CHECK(G.g_ideal.same_ideal(Ideal(G.rees.xt_ring, {Pxt(G.rees, "x"), Pxt(G.rees, "y")})));
  for (unsigned n = 0; n <= 5; ++n) CHECK(graded_piece_dim(G, n) == n + 1);
}

TEST_CASE("associated graded of the semigroup curve") {
  ModelPtr A = LocalRingModel::build(32003, {"x", "y"}, {"y^3 - x^4"});
  MPrimaryIdeal m =
      MPrimaryIdeal::declare(A, {P(A, "x"), P(A, "y")});
  GradedPresentation G = assoc_graded_presentation(m);
  // G = k[T1,T2]/(T2^3): Hilbert function 1,2,3,3,3...
  CHECK(graded_piece_dim(G, 0) == 1);
  CHECK(graded_piece_dim(G, 1) == 2);
  CHECK(graded_piece_dim(G, 2) == 3);
  CHECK(graded_piece_dim(G, 3) == 3);
  CHECK(graded_piece_dim(G, 4) == 3);
  // the lead form of the relation survives: T2^3 vanishes in G
  Polynomial t2 = Polynomial::variable(G.rees.xt_ring, G.rees.n_x + 1);
  CHECK(G.g_ideal.contains(t2 * t2 * t2));
}

TEST_CASE("associated graded of a complete intersection") {
  ModelPtr A = regular2();
  MPrimaryIdeal I = MPrimaryIdeal::declare(A, {P(A, "x^2"), P(A, "y^2")});
  GradedPresentation G = assoc_graded_presentation(I);
  // G = (A/I)[T1,T2]: dim G_n = 4(n+1), cross-checked by the Hilbert function
  for (unsigned n = 0; n <= 4; ++n) CHECK(graded_piece_dim(G, n) == 4 * (n + 1));
}

TEST_CASE("initial forms") {
  ModelPtr A = regular2();
  MPrimaryIdeal m = MPrimaryIdeal::declare(A, {P(A, "x"), P(A, "y")});
  GradedPresentation Gm = assoc_graded_presentation(m);

  InitialForm v0 = initial_form(P(A, "1 + x"), m, Gm);
  CHECK(v0.order == 0);

  InitialForm v2 = initial_form(P(A, "x^2"), m, Gm);
  CHECK(v2.order == 2);

  MPrimaryIdeal I = MPrimaryIdeal::declare(A, {P(A, "x^2"), P(A, "y^2")});
  GradedPresentation G = assoc_graded_presentation(I);
  InitialForm v1 = initial_form(P(A, "x^2 + y^3"), I, G);
  CHECK(v1.order == 1);
  // exact class in I/I^2: T1 + y T2 (y^3 = y . y^2 does not lie in I^2)
  Polynomial expected = normal_form(Pxt(G.rees, "T1 + y T2"), G.g_ideal);
  CHECK(v1.representative == expected);

  CHECK_THROWS_AS(initial_form(Polynomial::zero(A->ring()), I, G),
                  PreconditionError);
}

TEST_CASE("combination forms match initial forms for exact combinations") {
  ModelPtr A = regular2();
  MPrimaryIdeal I = MPrimaryIdeal::declare(A, {P(A, "x^2"), P(A, "y^2")});
  GradedPresentation G = assoc_graded_presentation(I);
  Polynomial elt = P(A, "3 x^2 + 5 y^2");
  InitialForm via_lift = initial_form(elt, I, G);
  Polynomial via_coeffs = combination_form(G, {3, 5});
  CHECK(via_lift.order == 1);
  CHECK(via_lift.representative == via_coeffs);
}

TEST_CASE("G-regularity of sampled sequences") {
  ModelPtr A = regular2();

  // regular ring, I = m: generic linear forms are G-regular
  MPrimaryIdeal m = MPrimaryIdeal::declare(A, {P(A, "x"), P(A, "y")});
  GradedPresentation Gm = assoc_graded_presentation(m);
  SuperficialSequence sm = sample_superficial_sequence(m, 2, 11);
  std::vector<Polynomial> reps;
  for (const auto& s : sm.steps) reps.push_back(combination_form(Gm, s.coeffs));
  RegularityCertificate cm = is_g_regular_sequence(reps, Gm);
  CHECK(cm.regular);

  // complete intersection: sampled pair is G-regular
  MPrimaryIdeal I2 = MPrimaryIdeal::declare(A, {P(A, "x^2"), P(A, "y^2")});
  GradedPresentation G2 = assoc_graded_presentation(I2);
  SuperficialSequence s2 = sample_superficial_sequence(I2, 2, 12);
  reps.clear();
  for (const auto& s : s2.steps) reps.push_back(combination_form(G2, s.coeffs));
  CHECK(is_g_regular_sequence(reps, G2).regular);

  // the depth-zero corpus ideal fails already at r = 1, with a witness
  MPrimaryIdeal I4 = MPrimaryIdeal::declare(
      A, {P(A, "x^4"), P(A, "x^3 y"), P(A, "x y^3"), P(A, "y^4")});
  GradedPresentation G4 = assoc_graded_presentation(I4);
  SuperficialSequence s4 = sample_superficial_sequence(I4, 1, 13);
  reps.clear();
  for (const auto& s : s4.steps) reps.push_back(combination_form(G4, s.coeffs));
  RegularityCertificate c4 = is_g_regular_sequence(reps, G4);
  CHECK_FALSE(c4.regular);
  CHECK_FALSE(c4.witness.empty());
}

TEST_CASE("depth of the associated graded ring, both strategies") {
  ModelPtr A = regular2();
  auto depth_of = [&](std::vector<const char*> gens) {
    std::vector<Polynomial> polys;
    for (const char* s : gens) polys.push_back(P(A, s));
    MPrimaryIdeal I = MPrimaryIdeal::declare(A, polys);
    return depth_assoc_graded(I, DepthStrategy::Both, 21);
  };
  DepthCertificate dm = depth_of({"x", "y"});
  CHECK(dm.value == 2);
  CHECK(dm.vv_value == dm.resolution_value);

  CHECK(depth_of({"x^2", "y^2"}).value == 2);
  CHECK(depth_of({"x^4", "x^3 y", "x y^3", "y^4"}).value == 0);

  ModelPtr S = LocalRingModel::build(32003, {"x", "y"}, {"y^3 - x^4"});
  MPrimaryIdeal sm =
      MPrimaryIdeal::declare(S, {P(S, "x"), P(S, "y")});
  DepthCertificate ds = depth_assoc_graded(sm, DepthStrategy::Both, 22);
  CHECK(ds.value == 1);
}

TEST_CASE("depth requires a Cohen-Macaulay model") {
  ModelPtr A = LocalRingModel::build(32003, {"x", "y"}, {"x y", "x^2"});
  MPrimaryIdeal m = MPrimaryIdeal::declare(A, {P(A, "x"), P(A, "y")});
  CHECK_THROWS_AS(depth_assoc_graded(m, DepthStrategy::Both, 1),
                  PreconditionError);
}

TEST_CASE("VV criterion: V = 0 iff the initial forms are G-regular") {
  ModelPtr A = regular2();
  struct Entry {
    std::vector<const char*> gens;
    unsigned r;
  };
  std::vector<Entry> corpus = {
      {{"x", "y"}, 2},
      {{"x^2", "y^2"}, 2},
      {{"x^4", "x^3 y", "x y^3", "y^4"}, 1},
      {{"x^4", "x^3 y", "x y^3", "y^4"}, 2},
  };
  for (const Entry& e : corpus) {
    std::vector<Polynomial> polys;
    for (const char* s : e.gens) polys.push_back(P(A, s));
    MPrimaryIdeal I = MPrimaryIdeal::declare(A, polys);
    GradedPresentation G = assoc_graded_presentation(I);
    SuperficialSequence seq = sample_superficial_sequence(I, e.r, 31 + e.r);
    VvModuleReport rep = vv_module(seq, I);
    REQUIRE(rep.stabilized);
    std::vector<Polynomial> reps;
    for (const auto& s : seq.steps) reps.push_back(combination_form(G, s.coeffs));
    RegularityCertificate reg = is_g_regular_sequence(reps, G);
    CHECK((rep.total_length == 0) == reg.regular);
  }
}
