#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gg/bialg.hpp"

using namespace gg;

namespace {

std::vector<GaussianRational> basis_vec(int n, int i) {
  std::vector<GaussianRational> e(n, GaussianRational(0));
  e[i] = GaussianRational(1);
  return e;
}

/// Independent expansion of [[r,r]] from the definition: sums over tensor
/// factors with the bracket evaluated on basis vectors.
Tensor3 cybe_oracle(const LieAlgebraData& g, const Matrix<GaussianRational>& r) {
  int n = g.dim;
  Tensor3 t(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          GaussianRational rr = r.at(i, j) * r.at(k, l);
          if (rr.is_zero()) continue;
          auto bik = g.bracket(basis_vec(n, i), basis_vec(n, k));
          auto bjk = g.bracket(basis_vec(n, j), basis_vec(n, k));
          auto bjl = g.bracket(basis_vec(n, j), basis_vec(n, l));
          for (int m = 0; m < n; ++m) {
            t.at(m, j, l) += bik[m] * rr;   // [r12, r13]
            t.at(i, m, l) += bjk[m] * rr;   // [r12, r23]
            t.at(i, k, m) += bjl[m] * rr;   // [r13, r23]
          }
        }
  return t;
}

/// ad_{e_m} r as a matrix identity: C_m r + r C_m^T with (C_m)_ab = c^a_{mb}.
Matrix<GaussianRational> ad_r_oracle(const LieAlgebraData& g,
                                     const Matrix<GaussianRational>& r, int m) {
  int n = g.dim;
  Matrix<GaussianRational> cm(n, n, GaussianRational(0));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) cm.at(a, b) = g.c.at(m, b, a);
  return cm * r + r * cm.transpose();
}

}  // namespace

TEST_CASE("jacobi check and construction") {
  LieAlgebraData g = sl2();
  CHECK(jacobi_check(g.c).ok());

  // textbook brackets
  auto h = basis_vec(3, 0), e = basis_vec(3, 1), f = basis_vec(3, 2);
  CHECK(g.bracket(h, e) == std::vector<GaussianRational>{0, 2, 0});
  CHECK(g.bracket(h, f) == std::vector<GaussianRational>{0, 0, -2});
  CHECK(g.bracket(e, f) == std::vector<GaussianRational>{1, 0, 0});

  CHECK(jacobi_check(abelian_algebra(4).c).ok());

  // perturbed sl2: [H,E] = 3E breaks Jacobi and is reported
  Tensor3 bad = g.c;
  bad.at(0, 1, 1) = GaussianRational(3);
  bad.at(1, 0, 1) = GaussianRational(-3);
  JacobiReport rep = jacobi_check(bad);
  CHECK(rep.antisymmetric);
  CHECK_FALSE(rep.violations.empty());
  CHECK_THROWS_AS(LieAlgebraData(3, bad), std::invalid_argument);
}

TEST_CASE("cybe obstruction") {
  // abelian: obstruction vanishes for any r; factorizable iff s invertible
  LieAlgebraData ab = abelian_algebra(2);
  Matrix<GaussianRational> r1(2, 2, GaussianRational(0));
  r1.at(0, 0) = GaussianRational(1);
  r1.at(1, 1) = GaussianRational(2);
  r1.at(0, 1) = GaussianRational(3);
  CybeReport c1 = cybe_obstruction(ab, RMatrix(r1));
  CHECK(c1.cybe_zero);
  CHECK(c1.s_ad_invariant);
  CHECK(c1.s_invertible);
  CHECK(c1.factorizable());

  Matrix<GaussianRational> r2(2, 2, GaussianRational(0));
  r2.at(0, 1) = GaussianRational(1);
  r2.at(1, 0) = GaussianRational(-1);  // purely antisymmetric: s = 0
  CybeReport c2 = cybe_obstruction(ab, RMatrix(r2));
  CHECK(c2.cybe_zero);
  CHECK_FALSE(c2.s_invertible);
  CHECK_FALSE(c2.factorizable());

  // sl2 standard r is factorizable; obstruction cross-checked term by term
  LieAlgebraData g = sl2();
  RMatrix r = sl2_standard_r();
  CybeReport cy = cybe_obstruction(g, r);
  CHECK(cy.cybe_zero);
  CHECK(cy.s_ad_invariant);
  CHECK(cy.s_invertible);
  CHECK(cy.factorizable());
  CHECK(cybe_oracle(g, r.r).is_zero());

  // s entries: 1/4 on HH, 1/2 symmetrized EF
  CHECK(r.s.at(0, 0) == GaussianRational::from_fraction(1, 4));
  CHECK(r.s.at(1, 2) == GaussianRational::from_fraction(1, 2));
  CHECK(r.s.at(2, 1) == GaussianRational::from_fraction(1, 2));

  // purely antisymmetric sl2 r-matrix: not factorizable
  Matrix<GaussianRational> ra(3, 3, GaussianRational(0));
  ra.at(1, 2) = GaussianRational(1);
  ra.at(2, 1) = GaussianRational(-1);
  CHECK_FALSE(cybe_obstruction(g, RMatrix(ra)).factorizable());

  // a random non-solution has matching nonzero oracle
  Matrix<GaussianRational> rb(3, 3, GaussianRational(0));
  rb.at(1, 2) = GaussianRational(1);
  CybeReport cb = cybe_obstruction(g, RMatrix(rb));
  CHECK_FALSE(cb.cybe_zero);
  Tensor3 oracle = cybe_oracle(g, rb);
  for (int i = 0; i < 27; ++i) CHECK(cb.obstruction.v[i] == oracle.v[i]);
}

TEST_CASE("cocommutator") {
  LieAlgebraData ab = abelian_algebra(3);
  Matrix<GaussianRational> r0(3, 3, GaussianRational(0));
  r0.at(0, 1) = GaussianRational(5);
  CocommutatorReport arep = cocommutator(ab, RMatrix(r0));
  CHECK(arep.delta.is_zero());
  CHECK(arep.dual_c.is_zero());
  CHECK(arep.ok());

  LieAlgebraData g = sl2();
  RMatrix r = sl2_standard_r();
  CocommutatorReport rep = cocommutator(g, r);
  CHECK(rep.antisymmetric);
  CHECK(rep.dual_jacobi);
  CHECK(rep.ok());
  for (int m = 0; m < 3; ++m) {
    Matrix<GaussianRational> oracle = ad_r_oracle(g, r.r, m);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) CHECK(rep.delta.at(m, a, b) == oracle.at(a, b));
  }

  // an antisymmetric r whose obstruction is not ad-invariant yields a dual
  // Jacobi failure. On a 3-dim unimodular algebra Lambda^3 g is the trivial
  // representation, so the obstruction of a skew r is always invariant there;
  // the smallest counterexamples live on sl2 + R.
  Tensor3 c4(4);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) c4.at(i, j, k) = g.c.at(i, j, k);
  LieAlgebraData g4(4, std::move(c4));
  Matrix<GaussianRational> rb(4, 4, GaussianRational(0));
  rb.at(0, 1) = GaussianRational(1);  // H ^ E
  rb.at(1, 0) = GaussianRational(-1);
  rb.at(0, 3) = GaussianRational(1);  // H ^ e3 (central direction)
  rb.at(3, 0) = GaussianRational(-1);
  CocommutatorReport bad = cocommutator(g4, RMatrix(rb));
  CHECK(bad.antisymmetric);
  CHECK_FALSE(bad.dual_jacobi);
}

TEST_CASE("manin triple") {
  // 1-dim abelian, r = s = 1: the hyperbolic plane of the dual torus pair
  LieAlgebraData ab = abelian_algebra(1);
  Matrix<GaussianRational> one(1, 1, GaussianRational(0));
  one.at(0, 0) = GaussianRational(1);
  ManinTripleData flat = manin_triple(ab, RMatrix(one));
  CHECK(flat.ok());
  CHECK(flat.pairing.at(0, 0) == GaussianRational::from_fraction(1, 2));
  CHECK(flat.pairing.at(1, 1) == GaussianRational::from_fraction(-1, 2));
  CHECK(flat.embed_ghat.at(0, 0) == GaussianRational(1));
  CHECK(flat.embed_ghat.at(1, 0) == GaussianRational(-1));

  LieAlgebraData g = sl2();
  ManinTripleData tr = manin_triple(g, sl2_standard_r());
  CHECK(tr.subalgebras_ok);
  CHECK(tr.isotropic_ok);
  CHECK(tr.invariant_ok);
  CHECK(tr.spans_ok);
  CHECK(tr.duality_ok);
  CHECK(tr.ok());

  // non-factorizable r is rejected
  Matrix<GaussianRational> ra(3, 3, GaussianRational(0));
  ra.at(1, 2) = GaussianRational(1);
  ra.at(2, 1) = GaussianRational(-1);
  CHECK_THROWS_AS(manin_triple(g, RMatrix(ra)), std::invalid_argument);
}

TEST_CASE("commuting forces abelian") {
  LieAlgebraData ab = abelian_algebra(1);
  Matrix<GaussianRational> one(1, 1, GaussianRational(0));
  one.at(0, 0) = GaussianRational(1);
  CommutingReport rep = commuting_abelian_check(manin_triple(ab, RMatrix(one)));
  CHECK(rep.hypothesis);
  CHECK(rep.abelian);

  CommutingReport srep = commuting_abelian_check(manin_triple(sl2(), sl2_standard_r()));
  CHECK_FALSE(srep.hypothesis);

  LieAlgebraData ab2 = abelian_algebra(2);
  Matrix<GaussianRational> id2(2, 2, GaussianRational(0));
  id2.at(0, 0) = GaussianRational(1);
  id2.at(1, 1) = GaussianRational(1);
  CommutingReport rep2 = commuting_abelian_check(manin_triple(ab2, RMatrix(id2)));
  CHECK(rep2.hypothesis);
  CHECK(rep2.abelian);
}
