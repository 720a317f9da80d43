#pragma once

#include "gg/coeff.hpp"
#include "gg/matrix.hpp"
#include "gg/paired.hpp"

namespace gg {

inline Matrix<GaussianRational> eval_matrix(const Matrix<Coeff>& m,
                                            const std::vector<GaussianRational>& point,
                                            const std::vector<std::string>& names = {}) {
  Matrix<GaussianRational> r(m.rows(), m.cols(), GaussianRational(0));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r.at(i, j) = m.at(i, j).eval(point, names);
  return r;
}

/// Positivity of <G., .> for a function-field metric, certified at sample
/// points (positivity over a function field is an open condition; it only
/// qualifies inputs and never enters an identity).
inline GkReport is_gk_sampled(const LinearGK<Coeff>& gk,
                              const std::vector<std::vector<GaussianRational>>& points,
                              const std::vector<std::string>& names = {}) {
  GkReport rep = gk_structure_report(gk);
  int n = gk.g.rows() / 2;
  rep.positivity_ok = !points.empty();
  for (const auto& pt : points) {
    Matrix<GaussianRational> g = eval_matrix(gk.g, pt, names);
    Matrix<GaussianRational> p = natural_pairing_matrix(n, GaussianRational(0));
    if (!positive_definite(g.transpose() * p)) rep.positivity_ok = false;
    ++rep.positivity_points;
  }
  return rep;
}

}  // namespace gg
