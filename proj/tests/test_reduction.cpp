#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gg/cp2.hpp"
#include "gg/reduction.hpp"

using namespace gg;

namespace {

TorusActionData example_action() {
  auto chart = cp2::invariant_chart();
  return TorusActionData{chart, cp2::j1_invariant(chart), cp2::j2_invariant(chart),
                         TwistData(cp2::h_invariant(chart)),
                         {cp2::moment_invariant(chart)},
                         {cp2::moment_invariant(chart)}};
}

/// Level-set model of the example: the invariant chart with q dropped.
ChartPtr level_chart() {
  return std::make_shared<Chart>(
      "level", std::vector<std::pair<std::string, CoordKind>>{
                   {"u", CoordKind::Full},
                   {"phi1", CoordKind::Angle},
                   {"phi2", CoordKind::Angle}});
}

GenSection section_x(const ChartPtr& c) {
  VectorField x(c);
  x.set_component(1, c->one());
  DiffForm xi(c);
  xi.set_term({2}, -c->coordinate(0));
  return GenSection(std::move(x), std::move(xi));  // d/dphi1 - u dphi2
}

GenSection section_xhat(const ChartPtr& c) {
  VectorField x(c);
  x.set_component(2, -c->one());
  DiffForm xi(c);
  xi.set_term({1}, c->one() - c->coordinate(0));
  return GenSection(std::move(x), std::move(xi));  // -d/dphi2 + (1-u) dphi1
}

ReductionData example_reduction() {
  auto c = level_chart();
  DiffForm h(c);
  h.set_term({0, 1, 2}, c->one());  // du ^ dphi1 ^ dphi2
  DiffForm th(c), thh(c);
  th.set_term({1}, c->one());    // dphi1
  thh.set_term({2}, -c->one());  // -dphi2
  return ReductionData{TwistData(h), {section_x(c)}, {section_xhat(c)}, {th}, {thh}};
}

/// Two-copy product with invariant horizontal connection corrections, so
/// both reduced twisting forms and d(ThetaHat ^ Theta) are nonzero.
ReductionData product_reduction() {
  auto c = std::make_shared<Chart>(
      "product", std::vector<std::pair<std::string, CoordKind>>{
                     {"u1", CoordKind::Full},
                     {"u2", CoordKind::Full},
                     {"a1", CoordKind::Angle},
                     {"b1", CoordKind::Angle},
                     {"a2", CoordKind::Angle},
                     {"b2", CoordKind::Angle}});
  DiffForm h(c);
  h.set_term({0, 2, 3}, c->one());
  h.set_term({1, 4, 5}, c->one());
  auto mk = [&](int xc, Coeff xv, int fc, Coeff fv) {
    VectorField x(c);
    x.set_component(xc, xv);
    DiffForm xi(c);
    xi.set_term({fc}, fv);
    return GenSection(std::move(x), std::move(xi));
  };
  Coeff u1 = c->coordinate(0), u2 = c->coordinate(1), one = c->one();
  std::vector<GenSection> xs{mk(2, one, 3, -u1), mk(4, one, 5, -u2)};
  std::vector<GenSection> xhats{mk(3, -one, 2, one - u1), mk(5, -one, 4, one - u2)};
  DiffForm t1(c), t2(c), th1(c), th2(c);
  t1.set_term({2}, one);
  t1.set_term({0}, u2);  // da1 + u2 du1
  t2.set_term({4}, one);
  th1.set_term({3}, -one);
  th2.set_term({5}, -one);
  th2.set_term({1}, u1);  // -db2 + u1 du2
  return ReductionData{TwistData(h), xs, xhats, {t1, t2}, {th1, th2}};
}

}  // namespace

TEST_CASE("moment sections") {
  TorusActionData act = example_action();
  MomentSections secs = moment_sections(act);
  REQUIRE(secs.xs.size() == 1);
  REQUIRE(secs.xhats.size() == 1);

  auto chart = act.chart;
  // J1(df) = d/dphi1 - u dphi2, J2(df) = -d/dphi2 + (1-u) dphi1
  VectorField x1(chart);
  x1.set_component(2, chart->one());
  DiffForm xi1(chart);
  xi1.set_term({3}, -chart->coordinate(1));
  CHECK(secs.xs[0] == GenSection(x1, xi1));
  VectorField x2(chart);
  x2.set_component(3, -chart->one());
  DiffForm xi2(chart);
  xi2.set_term({2}, chart->one() - chart->coordinate(1));
  CHECK(secs.xhats[0] == GenSection(x2, xi2));

  // iota_X df = 0
  for (const auto& s : secs.all()) CHECK(s.x.apply(act.moments[0]).is_zero());

  // constant symplectic chart, f = u: X = -omega^{-1}(du), still iota_X df = 0
  auto disc = std::make_shared<Chart>(
      "disc", std::vector<std::pair<std::string, CoordKind>>{
                  {"u", CoordKind::Full}, {"v", CoordKind::Full}});
  Matrix<Coeff> omega(2, 2, disc->zero());
  omega.at(0, 1) = -disc->one();
  omega.at(1, 0) = disc->one();
  TorusActionData flat{disc, gcs_from_symplectic(omega), gcs_from_symplectic(omega),
                       TwistData::zero(disc), {disc->coordinate(0)}, {}};
  MomentSections fs = moment_sections(flat);
  CHECK(fs.xs[0].xi.is_zero());
  CHECK(fs.xs[0].x.apply(disc->coordinate(0)).is_zero());
  CHECK_FALSE(fs.xs[0].x.is_zero());

  // constant moment -> error
  TorusActionData bad = example_action();
  bad.moments = {chart->one()};
  CHECK_THROWS_AS(moment_sections(bad), std::invalid_argument);
}

TEST_CASE("hamiltonian checks") {
  TorusActionData act = example_action();
  MomentSections secs = moment_sections(act);
  HamiltonianReport rep = hamiltonian_checks(act, secs);
  CHECK(rep.isotropy_ok);
  CHECK(rep.brackets_ok);
  CHECK(rep.twist_invariant_ok);
  CHECK(rep.splitting_ok);
  CHECK(rep.equivariance_ok);
  CHECK(rep.ok());

  // H = 0: the splitting condition d xi = iota_X H acquires a residual
  TorusActionData noh = act;
  noh.tw = TwistData::zero(act.chart);
  HamiltonianReport bad = hamiltonian_checks(noh, secs);
  CHECK_FALSE(bad.splitting_ok);
  CHECK_FALSE(bad.ok());
}

TEST_CASE("pairing P") {
  TorusActionData act = example_action();
  MomentSections secs = moment_sections(act);
  PairingReport rep = pairing_P(secs.xs, secs.xhats);
  CHECK(rep.constant_ok);
  CHECK(rep.invertible);
  CHECK(rep.p.at(0, 0) == GaussianRational(1));  // 2<J1(df), J2(df)> = 1
  CHECK(rep.ok());

  // degenerate control: pairing a section against itself gives P = [0]
  PairingReport deg = pairing_P(secs.xs, secs.xs);
  CHECK(deg.constant_ok);
  CHECK_FALSE(deg.invertible);

  // non-constant control
  auto chart = act.chart;
  GenSection scaled = secs.xhats[0] * chart->coordinate(1);
  PairingReport nc = pairing_P(secs.xs, {scaled});
  CHECK_FALSE(nc.constant_ok);
  CHECK_FALSE(nc.ok());
}

TEST_CASE("connection and b-tilde") {
  ReductionData rd = example_reduction();
  ConnectionReport conn = connection_check(rd);
  CHECK(conn.dual_ok);
  CHECK(conn.invariant_ok);
  CHECK(conn.cross_t_hat.at(0, 0).is_zero());
  CHECK(conn.cross_hat_t.at(0, 0).is_zero());

  BTildeReport bt = b_tilde(rd);
  auto c = rd.tw.chart();
  DiffForm expect(c);  // (1 - 2u) dphi1 ^ dphi2
  expect.set_term({1, 2}, c->one() - c->coordinate(0) - c->coordinate(0));
  CHECK(bt.b == expect);
  CHECK(bt.invariant_ok);
  CHECK(bt.horizontal_ok);

  // xi = 0 data: Btilde = 0
  ReductionData bare = rd;
  bare.xs = {GenSection(rd.xs[0].x, DiffForm(c))};
  bare.xhats = {GenSection(rd.xhats[0].x, DiffForm(c))};
  CHECK(b_tilde(bare).b.is_zero());

  // product scenario: Btilde is the sum of the per-factor forms
  ReductionData prod = product_reduction();
  BTildeReport pbt = b_tilde(prod);
  CHECK(pbt.invariant_ok);
  CHECK(pbt.horizontal_ok);
  auto pc = prod.tw.chart();
  Coeff u1 = pc->coordinate(0), u2 = pc->coordinate(1);
  Coeff two = pc->constant(GaussianRational(2));
  DiffForm pexpect(pc);
  pexpect.set_term({2, 3}, pc->one() - two * u1);
  pexpect.set_term({4, 5}, pc->one() - two * u2);
  // horizontal connection pieces wedge against xi: extra invariant terms
  pexpect.add_term({0, 3}, -u1 * u2);               // (u2 du1) ^ (-u1 db1)
  pexpect.add_term({1, 4}, u1 * (pc->one() - u2));  // (u1 du2) ^ (1-u2) da2
  CHECK(pbt.b == pexpect);
}

TEST_CASE("reduced twisting forms") {
  ReductionData rd = example_reduction();
  BTildeReport bt = b_tilde(rd);
  ReducedTwistReport h = reduced_twisting(rd, bt.b, Side::T);
  ReducedTwistReport hh = reduced_twisting(rd, bt.b, Side::That);
  CHECK(h.basic_ok);
  CHECK(hh.basic_ok);
  // a 2-dimensional quotient carries no 3-forms: both pullbacks vanish
  CHECK(h.form.is_zero());
  CHECK(hh.form.is_zero());

  ReductionData prod = product_reduction();
  BTildeReport pbt = b_tilde(prod);
  ReducedTwistReport ph = reduced_twisting(prod, pbt.b, Side::T);
  ReducedTwistReport phh = reduced_twisting(prod, pbt.b, Side::That);
  CHECK(ph.basic_ok);
  CHECK(phh.basic_ok);
  CHECK_FALSE(ph.form.is_zero());
  CHECK_FALSE(phh.form.is_zero());
}

TEST_CASE("duality identity") {
  ReductionData rd = example_reduction();
  DualityReport rep = duality_check(rd);
  CHECK(rep.ok());
  CHECK(rep.residual.is_zero());
  CHECK(rep.families_isotropic);
  CHECK(rep.pairing.p.at(0, 0) == GaussianRational(1));

  ReductionData prod = product_reduction();
  DualityReport prep = duality_check(prod);
  CHECK(prep.ok());
  CHECK(prep.residual.is_zero());
  CHECK_FALSE(prep.h.form.is_zero());
  CHECK_FALSE(prep.hhat.form.is_zero());
  for (int j = 0; j < 2; ++j)
    for (int k = 0; k < 2; ++k)
      CHECK(prep.pairing.p.at(j, k) == GaussianRational(j == k ? 1 : 0));

  // corrupted pairing (P doubled): the correction term no longer cancels
  auto pc = prod.tw.chart();
  DiffForm cross(pc);
  for (size_t j = 0; j < prod.xs.size(); ++j)
    for (size_t k = 0; k < prod.xhats.size(); ++k)
      cross = cross + wedge(prod.theta_hat[k], prod.theta[j]) *
                          (prep.pairing.entries.at(static_cast<int>(j),
                                                   static_cast<int>(k)) *
                           pc->constant(GaussianRational(2)));
  DiffForm corrupted = prep.hhat.form - prep.h.form - exterior_d(cross);
  CHECK_FALSE(corrupted.is_zero());
}

TEST_CASE("t-duality group") {
  ReductionData rd = example_reduction();
  GaussianRational zero(0), one(1);

  // the four elements of O(1,1;Z)
  for (int sign : {1, -1}) {
    for (bool swap : {false, true}) {
      Matrix<GaussianRational> g(2, 2, zero);
      GaussianRational s((sign));
      if (swap) {
        g.at(0, 1) = s;
        g.at(1, 0) = s;
      } else {
        g.at(0, 0) = s;
        g.at(1, 1) = s;
      }
      TransformResult res = tduality_transform(g, rd);
      CHECK(res.g_orthogonal);
      CHECK(res.ok());
      CHECK(res.report->residual.is_zero());
      if (swap && sign == 1) {
        // the swap exchanges the roles of T and T-hat
        CHECK(res.data->xs[0] == rd.xhats[0]);
        CHECK(res.data->xhats[0] == rd.xs[0]);
        CHECK(res.data->theta[0] == rd.theta_hat[0]);
      }
      if (!swap && sign == 1) {
        CHECK(res.data->xs[0] == rd.xs[0]);
      }
    }
  }

  // a unipotent non-isometry is rejected
  Matrix<GaussianRational> bad = Matrix<GaussianRational>::identity(2, zero);
  bad.at(0, 1) = one;
  CHECK_FALSE(tduality_transform(bad, rd).g_orthogonal);

  // b-shear in O(2,2;Z) on the product
  ReductionData prod = product_reduction();
  Matrix<GaussianRational> b(2, 2, zero);
  b.at(0, 1) = one;
  b.at(1, 0) = -one;
  Matrix<GaussianRational> g = bshear_element(b);
  TransformResult res = tduality_transform(g, prod);
  CHECK(res.g_orthogonal);
  CHECK(res.ok());
  CHECK(res.report->residual.is_zero());
  // sheared T generators pick up hatted components, hatted ones unchanged
  CHECK(res.data->xhats[0] == prod.xhats[0]);
  CHECK(res.data->xs[0] == prod.xs[0] + prod.xhats[1] * prod.tw.chart()->constant(-one));

  // identity transform leaves everything fixed
  TransformResult idres =
      tduality_transform(Matrix<GaussianRational>::identity(4, zero), prod);
  CHECK(idres.ok());
  CHECK(idres.data->xs[0] == prod.xs[0]);
}

TEST_CASE("subtorus routing") {
  TorusActionData act = example_action();
  MomentSections secs = moment_sections(act);
  std::vector<Coeff> moms = act.moments;
  moms.insert(moms.end(), act.moments_hat.begin(), act.moments_hat.end());

  // the T factor itself: isotropic case
  SubtorusReport t = subtorus_reduction_check(act.chart, moms, secs.all(), {{1, 0}},
                                              SubtorusMode::Isotropic);
  CHECK(t.gram.at(0, 0).is_zero());
  CHECK(t.case1_applies);
  CHECK(t.lemma_ok);
  CHECK(t.ok());

  // anti-diagonal: <x_d, x_d> = iota_{X_d} xi_d = -1, case (1) fails,
  // case (2) applies
  SubtorusReport d = subtorus_reduction_check(act.chart, moms, secs.all(), {{1, -1}},
                                              SubtorusMode::Nondegenerate);
  CHECK(d.gram.at(0, 0) == act.chart->constant(GaussianRational(-1)));
  CHECK_FALSE(d.case1_applies);
  CHECK(d.case2_applies);
  CHECK(d.lemma_ok);
  CHECK(d.ok());

  // P-Lagrangian diagonal on the product: isotropic case in rank 2
  ReductionData prod = product_reduction();
  auto pc = prod.tw.chart();
  std::vector<GenSection> all = prod.xs;
  all.insert(all.end(), prod.xhats.begin(), prod.xhats.end());
  std::vector<Coeff> pmoms{pc->coordinate(0), pc->coordinate(1)};
  SubtorusReport pd = subtorus_reduction_check(
      pc, pmoms, all, {{1, 0, 0, 1}, {0, 1, -1, 0}}, SubtorusMode::Isotropic);
  CHECK(pd.gram.is_zero());
  CHECK(pd.case1_applies);
  CHECK(pd.lemma_ok);
  CHECK(pd.ok());
}

TEST_CASE("gcs type classification") {
  GaussianRational zero(0), one(1);
  Matrix<GaussianRational> jv(2, 2, zero);
  jv.at(0, 1) = -one;
  jv.at(1, 0) = one;
  auto jc = gcs_from_complex(jv);
  auto tc = classify_gcs(jc);
  CHECK(tc.complex_type);
  CHECK_FALSE(tc.symplectic_type);

  Matrix<GaussianRational> omega(2, 2, zero);
  omega.at(0, 1) = one;
  omega.at(1, 0) = -one;
  auto js = gcs_from_symplectic(omega);
  auto ts = classify_gcs(js);
  CHECK(ts.symplectic_type);
  CHECK_FALSE(ts.complex_type);

  // a B-sheared symplectic structure is neither
  Matrix<GaussianRational> bb(2, 2, zero);
  bb.at(0, 1) = one;
  bb.at(1, 0) = -one;
  auto sheared = conjugate(b_transform_matrix(bb), js);
  auto tsh = classify_gcs(sheared);
  CHECK_FALSE(tsh.complex_type);
  CHECK_FALSE(tsh.symplectic_type);
}
