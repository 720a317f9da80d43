#include "gg/reduction.hpp"

namespace gg {

namespace {

/// Stacked (0, df) covector of a moment function.
std::vector<Coeff> stacked_df(const ChartPtr& chart, const Coeff& f) {
  int d = chart->dim();
  std::vector<Coeff> v(2 * d, chart->zero());
  for (int i = 0; i < d; ++i) v[d + i] = chart->partial(f, i);
  return v;
}

bool nonzero_df(const std::vector<Coeff>& v) {
  for (const auto& c : v)
    if (!c.is_zero()) return true;
  return false;
}

}  // namespace

MomentSections moment_sections(const TorusActionData& act) {
  MomentSections secs;
  for (const auto& f : act.moments) {
    auto df = stacked_df(act.chart, f);
    if (!nonzero_df(df)) throw std::invalid_argument("moment_sections: df = 0");
    secs.xs.push_back(GenSection::from_stacked(act.chart, act.j1.apply(df)));
  }
  for (const auto& f : act.moments_hat) {
    auto df = stacked_df(act.chart, f);
    if (!nonzero_df(df)) throw std::invalid_argument("moment_sections: df = 0");
    secs.xhats.push_back(GenSection::from_stacked(act.chart, act.j2.apply(df)));
  }
  return secs;
}

HamiltonianReport hamiltonian_checks(const TorusActionData& act,
                                     const MomentSections& secs) {
  HamiltonianReport rep;
  std::vector<GenSection> all = secs.all();
  std::vector<Coeff> moms = act.moments;
  moms.insert(moms.end(), act.moments_hat.begin(), act.moments_hat.end());
  size_t m = all.size();

  for (size_t j = 0; j < m; ++j)
    for (size_t k = 0; k < m; ++k)
      if (!(all[j].x.apply(moms[k]) + all[k].x.apply(moms[j])).is_zero())
        rep.isotropy_ok = false;

  for (size_t j = 0; j < m; ++j)
    for (size_t k = 0; k < m; ++k)
      if (!loday_bracket(all[j], all[k], act.tw).is_zero()) rep.brackets_ok = false;

  for (size_t j = 0; j < m; ++j) {
    if (!lie_derivative(all[j].x, act.tw.h()).is_zero()) rep.twist_invariant_ok = false;
    if (exterior_d(all[j].xi) != interior(all[j].x, act.tw.h())) rep.splitting_ok = false;
  }

  // infinitesimal equivariance: brackets land back in the coefficient span
  const ChartPtr& chart = act.chart;
  int d2 = 2 * chart->dim();
  Matrix<Coeff> span(d2, static_cast<int>(m), chart->zero());
  for (size_t c = 0; c < m; ++c) {
    auto v = all[c].stacked();
    for (int r = 0; r < d2; ++r) span.at(r, static_cast<int>(c)) = v[r];
  }
  for (size_t j = 0; j < m; ++j)
    for (size_t k = 0; k < m; ++k) {
      GenSection br = loday_bracket(all[j], all[k], act.tw);
      if (!span.solve(br.stacked())) rep.equivariance_ok = false;
    }
  return rep;
}

PairingReport pairing_P(const std::vector<GenSection>& xs,
                        const std::vector<GenSection>& xhats) {
  if (xs.empty() || xhats.empty())
    throw std::invalid_argument("pairing_P: empty generator family");
  const ChartPtr& chart = xs[0].chart();
  int m = static_cast<int>(xs.size()), mh = static_cast<int>(xhats.size());
  PairingReport rep{Matrix<Coeff>(m, mh, chart->zero()),
                    Matrix<GaussianRational>(m, mh, GaussianRational(0)),
                    true, "", false};
  Coeff two = chart->constant(GaussianRational(2));
  for (int j = 0; j < m; ++j)
    for (int k = 0; k < mh; ++k) {
      Coeff e = section_pairing(xs[j], xhats[k]) * two;
      rep.entries.at(j, k) = e;
      bool flat = true;
      for (int v = 0; v < e.nvars(); ++v)
        if (!e.derivative(v).is_zero()) flat = false;
      if (!flat) {
        rep.constant_ok = false;
        if (rep.nonconstant_entry.empty())
          rep.nonconstant_entry = std::to_string(j) + "," + std::to_string(k) + ": " +
                                  e.str(chart->full_names());
      } else {
        rep.p.at(j, k) = e.constant_value();
      }
    }
  if (rep.constant_ok) rep.invertible = rep.p.inverse().has_value();
  return rep;
}

ConnectionReport connection_check(const ReductionData& rd) {
  size_t m = rd.xs.size(), mh = rd.xhats.size();
  if (rd.theta.size() != m || rd.theta_hat.size() != mh)
    throw std::invalid_argument("connection_check: form count mismatch");
  const ChartPtr& chart = rd.tw.chart();
  ConnectionReport rep{true, true,
                       Matrix<Coeff>(static_cast<int>(m), static_cast<int>(mh), chart->zero()),
                       Matrix<Coeff>(static_cast<int>(mh), static_cast<int>(m), chart->zero())};
  auto delta = [&](size_t j, size_t k) { return j == k ? chart->one() : chart->zero(); };
  for (size_t j = 0; j < m; ++j)
    for (size_t k = 0; k < m; ++k)
      if (interior(rd.xs[j].x, rd.theta[k]).scalar_part() != delta(j, k))
        rep.dual_ok = false;
  for (size_t j = 0; j < mh; ++j)
    for (size_t k = 0; k < mh; ++k)
      if (interior(rd.xhats[j].x, rd.theta_hat[k]).scalar_part() != delta(j, k))
        rep.dual_ok = false;
  for (size_t j = 0; j < m; ++j)
    for (size_t k = 0; k < mh; ++k)
      rep.cross_t_hat.at(static_cast<int>(j), static_cast<int>(k)) =
          interior(rd.xs[j].x, rd.theta_hat[k]).scalar_part();
  for (size_t j = 0; j < mh; ++j)
    for (size_t k = 0; k < m; ++k)
      rep.cross_hat_t.at(static_cast<int>(j), static_cast<int>(k)) =
          interior(rd.xhats[j].x, rd.theta[k]).scalar_part();

  std::vector<VectorField> gens;
  for (const auto& s : rd.xs) gens.push_back(s.x);
  for (const auto& s : rd.xhats) gens.push_back(s.x);
  for (const auto& x : gens) {
    for (const auto& t : rd.theta)
      if (!lie_derivative(x, t).is_zero()) rep.invariant_ok = false;
    for (const auto& t : rd.theta_hat)
      if (!lie_derivative(x, t).is_zero()) rep.invariant_ok = false;
  }
  return rep;
}

namespace {

DiffForm family_btilde(const std::vector<GenSection>& secs,
                       const std::vector<DiffForm>& theta, const ChartPtr& chart) {
  DiffForm b(chart);
  Coeff half = chart->constant(GaussianRational::from_fraction(1, 2));
  for (size_t j = 0; j < secs.size(); ++j) b = b + wedge(theta[j], secs[j].xi);
  for (size_t j = 0; j < secs.size(); ++j)
    for (size_t k = 0; k < secs.size(); ++k) {
      Coeff c = interior(secs[k].x, secs[j].xi).scalar_part();
      b = b - wedge(theta[j], theta[k]) * (half * c);
    }
  return b;
}

}  // namespace

BTildeReport b_tilde(const ReductionData& rd) {
  const ChartPtr& chart = rd.tw.chart();
  BTildeReport rep{family_btilde(rd.xs, rd.theta, chart) +
                       family_btilde(rd.xhats, rd.theta_hat, chart),
                   true, true};

  std::vector<const GenSection*> gens;
  for (const auto& s : rd.xs) gens.push_back(&s);
  for (const auto& s : rd.xhats) gens.push_back(&s);
  for (const auto* s : gens)
    if (!lie_derivative(s->x, rep.b).is_zero()) rep.invariant_ok = false;

  // horizontal part via the projector product prod_j (1 - Theta_j ^ iota_{X_j})
  DiffForm hor = rep.b;
  std::vector<const DiffForm*> thetas;
  for (const auto& t : rd.theta) thetas.push_back(&t);
  for (const auto& t : rd.theta_hat) thetas.push_back(&t);
  for (size_t j = 0; j < gens.size(); ++j)
    hor = hor - wedge(*thetas[j], interior(gens[j]->x, hor));
  rep.horizontal_ok = hor.is_zero();
  return rep;
}

ReducedTwistReport reduced_twisting(const ReductionData& rd, const DiffForm& btilde,
                                    Side side) {
  const ChartPtr& chart = rd.tw.chart();
  DiffForm htilde = rd.tw.h() + exterior_d(btilde);
  const auto& quot = side == Side::T ? rd.xs : rd.xhats;
  const auto& other = side == Side::T ? rd.xhats : rd.xs;
  const auto& quot_theta = side == Side::T ? rd.theta : rd.theta_hat;
  const auto& other_theta = side == Side::T ? rd.theta_hat : rd.theta;

  DiffForm corr(chart);
  for (size_t l = 0; l < quot.size(); ++l) {
    DiffForm xip(chart);  // xi'_l = sum_j Theta^other_j iota_{X_l} xi^other_j
    for (size_t j = 0; j < other.size(); ++j)
      xip = xip + other_theta[j] * interior(quot[l].x, other[j].xi).scalar_part();
    corr = corr + wedge(quot_theta[l], xip);
  }
  ReducedTwistReport rep{htilde + exterior_d(corr), true, -1};
  for (size_t l = 0; l < quot.size(); ++l) {
    if (!interior(quot[l].x, rep.form).is_zero() ||
        !lie_derivative(quot[l].x, rep.form).is_zero()) {
      rep.basic_ok = false;
      if (rep.obstructing < 0) rep.obstructing = static_cast<int>(l);
    }
  }
  return rep;
}

DualityReport duality_check(const ReductionData& rd) {
  const ChartPtr& chart = rd.tw.chart();
  ConnectionReport conn = connection_check(rd);
  BTildeReport bt = b_tilde(rd);
  ReducedTwistReport h = reduced_twisting(rd, bt.b, Side::T);
  ReducedTwistReport hhat = reduced_twisting(rd, bt.b, Side::That);
  PairingReport pairing = pairing_P(rd.xs, rd.xhats);

  bool iso = true;
  for (const auto& fam : {rd.xs, rd.xhats})
    for (const auto& a : fam)
      for (const auto& b : fam)
        if (!section_pairing(a, b).is_zero()) iso = false;

  DiffForm cross(chart);  // ThetaHat ^ Theta contracted through P
  for (size_t j = 0; j < rd.xs.size(); ++j)
    for (size_t k = 0; k < rd.xhats.size(); ++k)
      cross = cross + wedge(rd.theta_hat[k], rd.theta[j]) *
                          pairing.entries.at(static_cast<int>(j), static_cast<int>(k));
  DiffForm residual = hhat.form - h.form - exterior_d(cross);
  return DualityReport{std::move(conn), std::move(bt),  std::move(h),
                       std::move(hhat), std::move(residual), std::move(pairing), iso};
}

TransformResult tduality_transform(const Matrix<GaussianRational>& g,
                                   const ReductionData& rd) {
  int m = static_cast<int>(rd.xs.size()), mh = static_cast<int>(rd.xhats.size());
  int tot = m + mh;
  if (g.rows() != tot || g.cols() != tot)
    throw std::invalid_argument("tduality_transform: g size mismatch");
  const ChartPtr& chart = rd.tw.chart();

  std::vector<GenSection> old = rd.xs;
  old.insert(old.end(), rd.xhats.begin(), rd.xhats.end());
  std::vector<DiffForm> old_theta = rd.theta;
  old_theta.insert(old_theta.end(), rd.theta_hat.begin(), rd.theta_hat.end());

  TransformResult res;

  // split pairing of the combined family; must be constant for an integral
  // lattice transformation to make sense
  Matrix<GaussianRational> psplit(tot, tot, GaussianRational(0));
  GaussianRational two(2);
  for (int a = 0; a < tot; ++a)
    for (int b = 0; b < tot; ++b) {
      Coeff e = section_pairing(old[a], old[b]);
      for (int v = 0; v < e.nvars(); ++v)
        if (!e.derivative(v).is_zero()) return res;
      psplit.at(a, b) = e.constant_value() * two;
    }
  res.g_orthogonal = (g.transpose() * psplit * g - psplit).is_zero();
  if (!res.g_orthogonal) return res;

  auto ginv = g.inverse();
  if (!ginv) {
    res.g_orthogonal = false;
    return res;
  }

  res.data = ReductionData{rd.tw, {}, {}, {}, {}};
  for (int a = 0; a < tot; ++a) {
    GenSection s = GenSection::zero(chart);
    for (int d = 0; d < tot; ++d) s = s + old[d] * chart->constant(g.at(d, a));
    DiffForm t(chart);
    for (int d = 0; d < tot; ++d) t = t + old_theta[d] * chart->constant(ginv->at(a, d));
    if (a < m) {
      res.data->xs.push_back(s);
      res.data->theta.push_back(t);
    } else {
      res.data->xhats.push_back(s);
      res.data->theta_hat.push_back(t);
    }
  }
  res.report = duality_check(*res.data);
  return res;
}

Matrix<GaussianRational> bshear_element(const Matrix<GaussianRational>& b) {
  int m = b.rows();
  if (b.cols() != m) throw std::invalid_argument("bshear_element: b not square");
  if (!(b + b.transpose()).is_zero())
    throw std::invalid_argument("bshear_element: b not skew");
  Matrix<GaussianRational> g =
      Matrix<GaussianRational>::identity(2 * m, GaussianRational(0));
  for (int k = 0; k < m; ++k)
    for (int j = 0; j < m; ++j) g.at(m + k, j) = b.at(k, j);
  return g;
}

SubtorusReport subtorus_reduction_check(const ChartPtr& chart,
                                        const std::vector<Coeff>& moments,
                                        const std::vector<GenSection>& sections,
                                        const std::vector<std::vector<long>>& basis,
                                        SubtorusMode mode) {
  int n = chart->dim();

  std::vector<std::vector<Coeff>> kgens;
  for (const auto& f : moments) kgens.push_back(stacked_df(chart, f));
  Subspace<Coeff> k = Subspace<Coeff>::span(2 * n, kgens, chart->zero());

  std::vector<GenSection> prim;
  for (const auto& c : basis) {
    if (c.size() != sections.size())
      throw std::invalid_argument("subtorus_reduction_check: basis length mismatch");
    GenSection s = GenSection::zero(chart);
    for (size_t i = 0; i < c.size(); ++i)
      s = s + sections[i] * chart->constant(GaussianRational(c[i]));
    prim.push_back(s);
  }
  std::vector<std::vector<Coeff>> kpgens;
  for (const auto& s : prim) kpgens.push_back(s.stacked());
  Subspace<Coeff> kp = Subspace<Coeff>::span(2 * n, kpgens, chart->zero());

  SubtorusReport rep;
  rep.mode = mode;
  int r = static_cast<int>(prim.size());
  rep.gram = Matrix<Coeff>(r, r, chart->zero());
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b) rep.gram.at(a, b) = section_pairing(prim[a], prim[b]);

  auto er = lemma_extend(n, k, kp);
  auto mr = lemma_missingrank(n, k, kp);
  rep.case1_applies = er.hypotheses_ok();
  rep.case2_applies = mr.hypotheses_ok();
  rep.lemma_ok = mode == SubtorusMode::Isotropic ? er.ok() : mr.ok();
  return rep;
}

GcsTypeReport classify_gcs(const Matrix<GaussianRational>& j) {
  int n = j.rows() / 2;
  GaussianRational proto(0);
  Matrix<GaussianRational> beta(n, n, proto), lower(n, n, proto);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      beta.at(a, b) = j.at(a, n + b);
      lower.at(a, b) = j.at(n + a, b);
    }
  GcsTypeReport rep;
  rep.complex_type = beta.is_zero() && lower.is_zero();
  auto betainv = beta.inverse();
  if (betainv) {
    // J_omega has upper-right -omega^{-1}; B-free iff J matches exactly
    Matrix<GaussianRational> omega = -*betainv;
    if ((omega + omega.transpose()).is_zero())
      rep.symplectic_type = j == gcs_from_symplectic(omega);
  }
  return rep;
}

}  // namespace gg
