// One test case per acceptance criterion; each prints a single pass/fail
// line so the run doubles as a checklist.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <random>

#include "gg/batch.hpp"
#include "gg/bialg.hpp"
#include "gg/cp2.hpp"
#include "gg/reduction.hpp"
#include "gg/sample.hpp"
#include "gg/scenario.hpp"

using namespace gg;

namespace {

void verdict(int n, const char* what, bool ok) {
  std::printf("criterion %2d [%s] %s\n", n, ok ? "pass" : "FAIL", what);
  std::fflush(stdout);
  CHECK(ok);
}

Report run_bundled(const std::string& name) {
  return run_scenario(load_scenario(std::string(GG_SCENARIO_DIR) + "/" + name + ".json"));
}

const CheckEntry* find_entry(const Report& rep, const std::string& id) {
  for (const auto& e : rep.entries)
    if (e.id == id) return &e;
  return nullptr;
}

GaussianRational rand_scalar(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  GaussianRational re = GaussianRational::from_fraction(num(rng), den(rng));
  GaussianRational im = GaussianRational::from_fraction(num(rng), den(rng));
  return re + GaussianRational::i() * im;
}

Coeff rand_poly_coeff(std::mt19937_64& rng, int nvars) {
  std::uniform_int_distribution<int> nterms(0, 2);
  std::uniform_int_distribution<int> expd(0, 1);
  Poly p(nvars);
  int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    Exps e(nvars, 0);
    for (int v = 0; v < nvars; ++v) e[v] = expd(rng);
    p.add_term(e, rand_scalar(rng));
  }
  return Coeff(std::move(p));
}

DiffForm rand_form(std::mt19937_64& rng, const ChartPtr& chart, int degree) {
  DiffForm f(chart);
  std::uniform_int_distribution<int> coin(0, 1);
  int d = chart->dim();
  for (int mask = 0; mask < (1 << d); ++mask) {
    WedgeIdx idx;
    for (int i = 0; i < d; ++i)
      if (mask & (1 << i)) idx.push_back(i);
    if (static_cast<int>(idx.size()) != degree) continue;
    if (coin(rng)) f.add_term(idx, rand_poly_coeff(rng, chart->nfull()));
  }
  return f;
}

GenSection rand_section(std::mt19937_64& rng, const ChartPtr& chart) {
  std::uniform_int_distribution<int> coin(0, 1);
  VectorField x(chart);
  for (int i = 0; i < chart->dim(); ++i)
    if (coin(rng)) x.set_component(i, rand_poly_coeff(rng, chart->nfull()));
  return GenSection(std::move(x), rand_form(rng, chart, 1));
}

TorusActionData example_action() {
  auto chart = cp2::invariant_chart();
  return TorusActionData{chart, cp2::j1_invariant(chart), cp2::j2_invariant(chart),
                         TwistData(cp2::h_invariant(chart)),
                         {cp2::moment_invariant(chart)},
                         {cp2::moment_invariant(chart)}};
}

ReductionData example_reduction() {
  auto c = std::make_shared<Chart>(
      "level", std::vector<std::pair<std::string, CoordKind>>{
                   {"u", CoordKind::Full},
                   {"phi1", CoordKind::Angle},
                   {"phi2", CoordKind::Angle}});
  DiffForm h(c);
  h.set_term({0, 1, 2}, c->one());
  VectorField x1(c), x2(c);
  x1.set_component(1, c->one());
  x2.set_component(2, -c->one());
  DiffForm xi1(c), xi2(c);
  xi1.set_term({2}, -c->coordinate(0));
  xi2.set_term({1}, c->one() - c->coordinate(0));
  DiffForm th(c), thh(c);
  th.set_term({1}, c->one());
  thh.set_term({2}, -c->one());
  return ReductionData{TwistData(h),
                       {GenSection(x1, xi1)},
                       {GenSection(x2, xi2)},
                       {th},
                       {thh}};
}

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
  t1.set_term({0}, u2);
  t2.set_term({4}, one);
  th1.set_term({3}, -one);
  th2.set_term({5}, -one);
  th2.set_term({1}, u1);
  return ReductionData{TwistData(h), xs, xhats, {t1, t2}, {th1, th2}};
}

std::vector<WedgeIdx> form_monomials(const ChartPtr& chart) {
  int d = chart->dim();
  std::vector<WedgeIdx> rows;
  for (int mask = 0; mask < (1 << d); ++mask) {
    WedgeIdx idx;
    for (int i = 0; i < d; ++i)
      if (mask & (1 << i)) idx.push_back(i);
    rows.push_back(std::move(idx));
  }
  std::sort(rows.begin(), rows.end(), WedgeIdxLess{});
  return rows;
}

DiffForm spinor_line(const Matrix<Coeff>& j, const ChartPtr& chart) {
  auto frame = eigenframe(j, chart);
  auto rows = form_monomials(chart);
  int nm = static_cast<int>(rows.size());
  Matrix<Coeff> stacked(nm * static_cast<int>(frame.size()), nm, chart->zero());
  for (size_t f = 0; f < frame.size(); ++f)
    for (int m = 0; m < nm; ++m) {
      DiffForm mono(chart);
      mono.set_term(rows[m], chart->one());
      DiffForm img = clifford(frame[f], mono);
      for (int r = 0; r < nm; ++r) {
        auto it = img.terms().find(rows[r]);
        if (it != img.terms().end())
          stacked.at(static_cast<int>(f) * nm + r, m) = it->second;
      }
    }
  auto ker = stacked.kernel();
  REQUIRE(ker.size() == 1);
  DiffForm rho(chart);
  for (int m = 0; m < nm; ++m)
    if (!ker[0][m].is_zero()) rho.set_term(rows[m], ker[0][m]);
  return rho;
}

}  // namespace

TEST_CASE("1: GK validity of the worked example, Cartesian chart") {
  auto cc = cp2::cartesian_chart();
  auto j1 = cp2::j1_cartesian(cc);
  auto j2 = cp2::j2_cartesian(cc);
  LinearGK<Coeff> gk = make_gk(j1, j2);
  GkReport rep = gk_structure_report(gk);
  bool anticommute_metric = (gk.g + j2 * j1).is_zero();  // G = -J2 J1 as well
  verdict(1, "J1^2 = J2^2 = -I, orthogonality, G = -J1 J2 = -J2 J1, G^2 = I",
          rep.j1.ok() && rep.j2.ok() && rep.commute_ok && rep.metric_square_ok &&
              rep.metric_sym_ok && anticommute_metric);
}

TEST_CASE("2: twisted integrability of both eigenframes") {
  auto inv = cp2::invariant_chart();
  TwistData h(cp2::h_invariant(inv));
  auto j1 = cp2::j1_invariant(inv);
  auto j2 = cp2::j2_invariant(inv);
  bool twisted = gcs_integrability(j1, inv, h).ok() && gcs_integrability(j2, inv, h).ok();
  bool control = !gcs_integrability(j1, inv, TwistData::zero(inv)).ok();
  verdict(2, "eigenframes involutive under *_H; H = 0 control fails",
          twisted && control);
}

TEST_CASE("3: moment sections and pairing reproduction") {
  TorusActionData act = example_action();
  MomentSections secs = moment_sections(act);
  auto chart = act.chart;
  VectorField x1(chart), x2(chart);
  x1.set_component(2, chart->one());
  x2.set_component(3, -chart->one());
  DiffForm xi1(chart), xi2(chart);
  xi1.set_term({3}, -chart->coordinate(1));
  xi2.set_term({2}, chart->one() - chart->coordinate(1));
  bool match = secs.xs.size() == 1 && secs.xhats.size() == 1 &&
               secs.xs[0] == GenSection(x1, xi1) && secs.xhats[0] == GenSection(x2, xi2);
  PairingReport pr = pairing_P(secs.xs, secs.xhats);
  bool pairing = pr.ok() && pr.p.at(0, 0) == GaussianRational(1);
  verdict(3, "J1(df), J2(df) match the displayed sections; 2<J1(df), J2(df)> = 1",
          match && pairing);
}

TEST_CASE("4: duality residual vanishes on example and product") {
  DualityReport ex = duality_check(example_reduction());
  DualityReport prod = duality_check(product_reduction());
  verdict(4, "duality residual 0 on cp2-example and on cp2-product with nonzero sides",
          ex.ok() && ex.residual.is_zero() && prod.ok() && prod.residual.is_zero() &&
              !prod.h.form.is_zero() && !prod.hhat.form.is_zero());
}

TEST_CASE("5: T-duality group preserves the identity") {
  ReductionData rd = example_reduction();
  GaussianRational zero(0), one(1);
  bool group_ok = true;
  for (int sign : {1, -1})
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
      group_ok = group_ok && res.ok() && res.report->residual.is_zero();
    }
  ReductionData prod = product_reduction();
  Matrix<GaussianRational> b(2, 2, zero);
  b.at(0, 1) = one;
  b.at(1, 0) = -one;
  TransformResult shear = tduality_transform(bshear_element(b), prod);
  verdict(5, "all four O(1,1;Z) elements and an O(2,2;Z) b-shear keep residual 0",
          group_ok && shear.ok() && shear.report->residual.is_zero());
}

TEST_CASE("6: Courant axiom suite with corrupted control") {
  auto chart = cp2::invariant_chart();
  BatchResult suite = run_batch(100, 20260823, [&](int, std::uint64_t s) {
    std::mt19937_64 rng(s);
    std::vector<GenSection> secs;
    for (int i = 0; i < 3; ++i) secs.push_back(rand_section(rng, chart));
    TwistData tw(exterior_d(rand_form(rng, chart, 2)));
    return axioms_check(secs, tw).ok();
  });

  std::mt19937_64 rng(mix_seed(20260823, 1u << 20));
  std::vector<GenSection> csecs;
  for (int i = 0; i < 3; ++i) csecs.push_back(rand_section(rng, chart));
  VectorField e1(chart), e2(chart), e3(chart);
  e1.set_component(1, chart->one());
  e2.set_component(2, chart->one());
  e3.set_component(3, chart->coordinate(1));
  csecs[0] = csecs[0] + GenSection(e1, DiffForm(chart));
  csecs[1] = csecs[1] + GenSection(e2, DiffForm(chart));
  csecs[2] = csecs[2] + GenSection(e3, DiffForm(chart));
  TwistData tw_bad(exterior_d(rand_form(rng, chart, 2)) + cp2::h_invariant(chart));
  bool control = axioms_check(csecs, tw_bad).ok() &&
                 axioms_check(csecs, tw_bad, /*corrupt=*/true).jacobi_failures > 0;
  verdict(6, ">= 100 random section triples satisfy the axioms; corrupted bracket fails",
          suite.ok() && suite.total >= 100 && control);
}

TEST_CASE("7: psi_H translation on random instances") {
  auto chart = cp2::invariant_chart();
  BatchResult suite = run_batch(50, 7070707, [&](int, std::uint64_t s) {
    std::mt19937_64 rng(s);
    auto rand_pair = [&] {
      std::uniform_int_distribution<int> coin(0, 1);
      VectorField x(chart);
      for (int i = 0; i < chart->dim(); ++i)
        if (coin(rng)) x.set_component(i, rand_poly_coeff(rng, chart->nfull()));
      return SymmetryPair(std::move(x), exterior_d(rand_form(rng, chart, 1)));
    };
    SymmetryPair p = rand_pair(), q = rand_pair();
    TwistData h(exterior_d(rand_form(rng, chart, 2)));
    TwistData hp(exterior_d(rand_form(rng, chart, 2)));
    return psi_translate_check(p, q, h, hp).ok();
  });
  verdict(7, ">= 50 random psi_H translation instances with residual 0",
          suite.ok() && suite.total >= 50);
}

TEST_CASE("8: spinor suite") {
  auto chart = cp2::invariant_chart();
  BatchResult cliff = run_batch(100, 80808, [&](int, std::uint64_t s) {
    std::mt19937_64 rng(s);
    GenSection a = rand_section(rng, chart), b = rand_section(rng, chart);
    DiffForm rho(chart);
    for (int d = 0; d <= 4; ++d) rho = rho + rand_form(rng, chart, d);
    DiffForm lhs = clifford(a, clifford(b, rho)) + clifford(b, clifford(a, rho));
    Coeff two = chart->constant(GaussianRational(2));
    return lhs == rho * (section_pairing(a, b) * two);
  });

  TwistData h(cp2::h_invariant(chart));
  bool lines_ok = true;
  for (const auto& j : {cp2::j1_invariant(chart), cp2::j2_invariant(chart)}) {
    DiffForm line = spinor_line(j, chart);
    auto ok = spinor_integrability(line, h);
    auto bad = spinor_integrability(line, TwistData::zero(chart));
    lines_ok = lines_ok && ok.solvable && !bad.solvable &&
               (d_twisted(line, h) - clifford(*ok.y, line)).is_zero();
  }
  verdict(8, ">= 100 Clifford pairs; canonical spinor lines integrable iff twisted",
          cliff.ok() && cliff.total >= 100 && lines_ok);
}

TEST_CASE("9: linear-lemma suite") {
  Report rep = run_bundled("linear-random");
  bool counts_ok = true;
  for (const char* id :
       {"lemma-extend-random", "lemma-missingrank-random", "lemma-kahler-random",
        "lemma-double-random", "lemma-dual-random", "example-point"}) {
    const CheckEntry* e = find_entry(rep, id);
    counts_ok = counts_ok && e && e->status == "pass";
  }
  verdict(9, "five lemma suites at 50 seeded instances each plus the example point",
          rep.overall() && counts_ok);
}

TEST_CASE("10: anti-diagonal reduction routing") {
  Report rep = run_bundled("antidiagonal");
  const CheckEntry* st = find_entry(rep, "subtorus-0");
  bool routed = st && st->status == "pass" &&
                st->residual.find("case 2") != std::string::npos &&
                st->residual.find("-1") != std::string::npos;
  verdict(10, "anti-diagonal direction: pairing -1, case (1) fails, case (2) applies",
          rep.overall() && routed);
}

TEST_CASE("11: bialgebra suite") {
  Report rep = run_bundled("sl2-rmatrix");
  bool entries_ok = true;
  for (const char* id : {"jacobi", "cybe", "cocommutator", "manin-triple",
                         "commuting-abelian", "dual-jacobi-control"}) {
    const CheckEntry* e = find_entry(rep, id);
    entries_ok = entries_ok && e && e->status == "pass";
  }
  // commuting hypothesis confirmed on an abelian double
  Matrix<GaussianRational> id2 = Matrix<GaussianRational>::identity(2, GaussianRational(0));
  CommutingReport ab = commuting_abelian_check(manin_triple(abelian_algebra(2), RMatrix(id2)));
  verdict(11, "sl2 r-matrix factorizable, Manin triple valid, commuting check on both sides",
          rep.overall() && entries_ok && ab.hypothesis && ab.abelian);
}

TEST_CASE("12: byte-identical deterministic reports") {
  Scenario sc;
  sc.name = "determinism-probe";
  sc.kind = "courant-axioms";
  sc.payload = R"({
    "chart": {"name": "invariant",
              "coords": [["q", "full"], ["u", "full"],
                         ["phi1", "angle"], ["phi2", "angle"]]},
    "seed": 99, "triples": 5, "psi_instances": 3, "clifford_pairs": 5})";
  Report a = run_scenario(sc);
  Report b = run_scenario(sc);
  Report c = run_bundled("cp2-example");
  Report d = run_bundled("cp2-example");
  verdict(12, "identical (scenario, seed) pairs give byte-identical reports",
          a.text() == b.text() && a.json() == b.json() && c.text() == d.text() &&
              a.overall() && c.overall());
}
