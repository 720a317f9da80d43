#pragma once

#include "gg/chart.hpp"
#include "gg/diffform.hpp"
#include "gg/expr.hpp"
#include "gg/matrix.hpp"

// The running example: C^2 minus the origin with the twisted structure pair,
// in the Cartesian chart (x1, y1, x2, y2) and in the invariant chart
// (q, u, phi1, phi2) with q = ln r (formal coordinate: only dq and the
// q-partials matter) and u = cos^2(lambda) = (x2^2 + y2^2)/r^2.

namespace gg::cp2 {

inline ChartPtr cartesian_chart() {
  return std::make_shared<Chart>(
      "cartesian", std::vector<std::pair<std::string, CoordKind>>{
                       {"x1", CoordKind::Full},
                       {"y1", CoordKind::Full},
                       {"x2", CoordKind::Full},
                       {"y2", CoordKind::Full}});
}

inline ChartPtr invariant_chart() {
  return std::make_shared<Chart>(
      "invariant", std::vector<std::pair<std::string, CoordKind>>{
                       {"q", CoordKind::Full},
                       {"u", CoordKind::Full},
                       {"phi1", CoordKind::Angle},
                       {"phi2", CoordKind::Angle}});
}

inline Matrix<Coeff> matrix_from_strings(const ChartPtr& chart,
                                         const std::vector<std::vector<std::string>>& rows) {
  int n = static_cast<int>(rows.size());
  Matrix<Coeff> m(n, static_cast<int>(rows[0].size()), chart->zero());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < static_cast<int>(rows[i].size()); ++j)
      m.at(i, j) = parse_coeff(rows[i][j], *chart);
  return m;
}

/// J1 in the Cartesian chart, stacked basis (dx-duals, dx's):
/// blocks r^2 J, -J, r^-2 J, -J with J = [[0,-1],[1,0]] on each C factor.
inline Matrix<Coeff> j1_cartesian(const ChartPtr& chart) {
  const std::string r2 = "(x1^2+y1^2+x2^2+y2^2)";
  return matrix_from_strings(
      chart, {{"0", "0", "0", "0", "0", "-" + r2, "0", "0"},
              {"0", "0", "0", "0", r2, "0", "0", "0"},
              {"0", "0", "0", "1", "0", "0", "0", "0"},
              {"0", "0", "-1", "0", "0", "0", "0", "0"},
              {"0", "-1/" + r2, "0", "0", "0", "0", "0", "0"},
              {"1/" + r2, "0", "0", "0", "0", "0", "0", "0"},
              {"0", "0", "0", "0", "0", "0", "0", "1"},
              {"0", "0", "0", "0", "0", "0", "-1", "0"}});
}

inline Matrix<Coeff> j2_cartesian(const ChartPtr& chart) {
  const std::string r2 = "(x1^2+y1^2+x2^2+y2^2)";
  return matrix_from_strings(
      chart, {{"0", "-1", "0", "0", "0", "0", "0", "0"},
              {"1", "0", "0", "0", "0", "0", "0", "0"},
              {"0", "0", "0", "0", "0", "0", "0", r2},
              {"0", "0", "0", "0", "0", "0", "-" + r2, "0"},
              {"0", "0", "0", "0", "0", "-1", "0", "0"},
              {"0", "0", "0", "0", "1", "0", "0", "0"},
              {"0", "0", "0", "1/" + r2, "0", "0", "0", "0"},
              {"0", "0", "-1/" + r2, "0", "0", "0", "0", "0"}});
}

/// H = -sin(2 lambda) d lambda ^ d phi1 ^ d phi2 pulled back to Cartesian
/// coordinates.
inline DiffForm h_cartesian(const ChartPtr& chart) {
  const std::string r4 = "(x1^2+y1^2+x2^2+y2^2)^2";
  DiffForm h(chart);
  h.set_term({0, 1, 2}, parse_coeff("2*y2/" + r4, *chart));
  h.set_term({0, 1, 3}, parse_coeff("-2*x2/" + r4, *chart));
  h.set_term({0, 2, 3}, parse_coeff("2*y1/" + r4, *chart));
  h.set_term({1, 2, 3}, parse_coeff("-2*x1/" + r4, *chart));
  return h;
}

/// The same pair written in the invariant chart, stacked basis
/// (dq-dual, du-dual, dphi1-dual, dphi2-dual, dq, du, dphi1, dphi2).
inline Matrix<Coeff> j1_invariant(const ChartPtr& chart) {
  return matrix_from_strings(
      chart, {{"0", "0", "0", "u", "0", "0", "-1", "0"},
              {"0", "0", "0", "2*u*(1-u)", "0", "0", "2*u", "0"},
              {"0", "0", "0", "0", "1", "-2*u", "0", "0"},
              {"-1", "-1/(2*u)", "0", "0", "0", "0", "0", "0"},
              {"0", "0", "u-1", "0", "0", "0", "0", "1"},
              {"0", "0", "1/2", "0", "0", "0", "0", "1/(2*u)"},
              {"1-u", "-1/2", "0", "0", "0", "0", "0", "0"},
              {"0", "0", "0", "0", "-u", "2*u*(u-1)", "0", "0"}});
}

inline Matrix<Coeff> j2_invariant(const ChartPtr& chart) {
  return matrix_from_strings(
      chart, {{"0", "0", "u-1", "0", "0", "0", "0", "1"},
              {"0", "0", "2*u*(1-u)", "0", "0", "0", "0", "2-2*u"},
              {"1", "1/(2*(u-1))", "0", "0", "0", "0", "0", "0"},
              {"0", "0", "0", "0", "-1", "2*u-2", "0", "0"},
              {"0", "0", "0", "u", "0", "0", "-1", "0"},
              {"0", "0", "0", "1/2", "0", "0", "-1/(2*u-2)", "0"},
              {"0", "0", "0", "0", "1-u", "2*u*(u-1)", "0", "0"},
              {"-u", "-1/2", "0", "0", "0", "0", "0", "0"}});
}

/// H = du ^ dphi1 ^ dphi2 (u = cos^2 lambda gives du = -sin(2 lambda) d lambda).
inline DiffForm h_invariant(const ChartPtr& chart) {
  DiffForm h(chart);
  h.set_term({1, 2, 3}, chart->one());
  return h;
}

/// Common moment map f = ln r = q.
inline Coeff moment_invariant(const ChartPtr& chart) { return chart->coordinate(0); }

/// Connection and splitting data of the two circle factors in the invariant
/// chart: theta pairs to the T generator, hatted data to the dual circle.
inline DiffForm theta(const ChartPtr& chart) {
  DiffForm t(chart);
  t.set_term({2}, chart->one());
  return t;  // dphi1
}
inline DiffForm theta_hat(const ChartPtr& chart) {
  DiffForm t(chart);
  t.set_term({3}, -chart->one());
  return t;  // -dphi2
}
inline DiffForm xi_form(const ChartPtr& chart) {
  DiffForm t(chart);
  t.set_term({3}, -chart->coordinate(1));
  return t;  // -u dphi2
}
inline DiffForm xi_hat_form(const ChartPtr& chart) {
  DiffForm t(chart);
  t.set_term({2}, chart->one() - chart->coordinate(1));
  return t;  // (1-u) dphi1
}

}  // namespace gg::cp2
