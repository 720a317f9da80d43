#pragma once

#include <random>
#include <string>
#include <vector>

#include "gg/rational.hpp"
#include "gg/matrix.hpp"
#include "gg/subspace.hpp"

namespace gg {

/// V + V* with the split pairing <X+xi, Y+eta> = (iota_X eta + iota_Y xi)/2.
/// Ambient vectors are stacked (X-components, xi-components) of length 2n.
template <class F>
Matrix<F> natural_pairing_matrix(int n, const F& proto) {
  Matrix<F> p(2 * n, 2 * n, proto);
  F half = proto.one_like() / (proto.one_like() + proto.one_like());
  for (int i = 0; i < n; ++i) {
    p.at(i, n + i) = half;
    p.at(n + i, i) = half;
  }
  return p;
}

template <class F>
F natural_pairing(const std::vector<F>& x, const std::vector<F>& y) {
  if (x.size() != y.size() || x.size() % 2 != 0)
    throw std::invalid_argument("natural_pairing: dimension mismatch");
  size_t n = x.size() / 2;
  F acc = x[0].zero_like();
  for (size_t i = 0; i < n; ++i) acc += x[i] * y[n + i] + y[i] * x[n + i];
  F two = acc.one_like() + acc.one_like();
  return acc / two;
}

struct GcsReport {
  bool square_ok = false;      // J^2 = -I
  bool orthogonal_ok = false;  // J^T P J = P
  bool ok() const { return square_ok && orthogonal_ok; }
  std::string violation() const {
    if (ok()) return "";
    std::string s;
    if (!square_ok) s += "J^2 != -I;";
    if (!orthogonal_ok) s += "J^T P J != P;";
    return s;
  }
};

template <class F>
GcsReport is_gcs(const Matrix<F>& j) {
  if (j.rows() != j.cols() || j.rows() % 2 != 0)
    throw std::invalid_argument("is_gcs: matrix must be square of even dimension");
  int n = j.rows() / 2;
  GcsReport rep;
  Matrix<F> id = Matrix<F>::identity(2 * n, j.proto());
  rep.square_ok = (j * j + id).is_zero();
  Matrix<F> p = natural_pairing_matrix(n, j.proto());
  rep.orthogonal_ok = (j.transpose() * p * j - p).is_zero();
  return rep;
}

/// J_omega = [[0, -omega^-1], [omega, 0]]; +i-eigenspace {X - i iota_X omega}.
template <class F>
Matrix<F> gcs_from_symplectic(const Matrix<F>& omega) {
  int n = omega.rows();
  if (omega.cols() != n) throw std::invalid_argument("gcs_from_symplectic: not square");
  if (!(omega + omega.transpose()).is_zero())
    throw std::invalid_argument("gcs_from_symplectic: omega not skew");
  auto inv = omega.inverse();
  if (!inv) throw std::invalid_argument("gcs_from_symplectic: omega degenerate");
  Matrix<F> j(2 * n, 2 * n, omega.proto());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      j.at(a, n + b) = -inv->at(a, b);
      j.at(n + a, b) = omega.at(a, b);
    }
  return j;
}

/// J_cx = [[-J, 0], [0, J^T]]; +i-eigenspace {X + iJX} + {xi - iJ^T xi}.
template <class F>
Matrix<F> gcs_from_complex(const Matrix<F>& jv) {
  int n = jv.rows();
  if (jv.cols() != n) throw std::invalid_argument("gcs_from_complex: not square");
  Matrix<F> id = Matrix<F>::identity(n, jv.proto());
  if (!(jv * jv + id).is_zero())
    throw std::invalid_argument("gcs_from_complex: J^2 != -I on V");
  Matrix<F> j(2 * n, 2 * n, jv.proto());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      j.at(a, b) = -jv.at(a, b);
      j.at(n + a, n + b) = jv.at(b, a);
    }
  return j;
}

/// e^B = [[I, 0], [B, I]] acting as X+xi -> X + xi + iota_X B.
template <class F>
Matrix<F> b_transform_matrix(const Matrix<F>& b) {
  int n = b.rows();
  if (b.cols() != n) throw std::invalid_argument("b_transform_matrix: not square");
  if (!(b + b.transpose()).is_zero())
    throw std::invalid_argument("b_transform_matrix: B not skew");
  Matrix<F> e = Matrix<F>::identity(2 * n, b.proto());
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c) e.at(n + a, c) = b.at(a, c);
  return e;
}

/// e^beta = [[I, beta], [0, I]], the dual shear by a skew bivector.
template <class F>
Matrix<F> beta_transform_matrix(const Matrix<F>& beta) {
  int n = beta.rows();
  if (beta.cols() != n) throw std::invalid_argument("beta_transform_matrix: not square");
  if (!(beta + beta.transpose()).is_zero())
    throw std::invalid_argument("beta_transform_matrix: beta not skew");
  Matrix<F> e = Matrix<F>::identity(2 * n, beta.proto());
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c) e.at(a, n + c) = beta.at(a, c);
  return e;
}

template <class F>
Matrix<F> conjugate(const Matrix<F>& g, const Matrix<F>& j) {
  auto ginv = g.inverse();
  if (!ginv) throw std::invalid_argument("conjugate: singular transformation");
  return g * j * *ginv;
}

template <class F>
struct LinearGK {
  Matrix<F> j1, j2, g;
};

struct GkReport {
  GcsReport j1, j2;
  bool commute_ok = false;     // J1 J2 = J2 J1
  bool metric_square_ok = false;  // G^2 = I
  bool metric_sym_ok = false;     // <G.,.> symmetric
  bool positivity_ok = false;     // sampled (function field) or exact (constants)
  int positivity_points = 0;
  bool ok() const {
    return j1.ok() && j2.ok() && commute_ok && metric_square_ok && metric_sym_ok &&
           positivity_ok;
  }
};

/// Leading-principal-minor positivity of the symmetric bilinear form
/// v -> <G v, v> for a constant real matrix form.
inline bool positive_definite(const Matrix<GaussianRational>& form) {
  int n = form.rows();
  // Gaussian elimination without pivot swaps: all leading minors of a
  // positive matrix are nonzero, so a zero pivot already means failure.
  Matrix<GaussianRational> m = form;
  for (int k = 0; k < n; ++k) {
    GaussianRational piv = m.at(k, k);
    if (!piv.is_real() || cmp(piv.re(), 0) <= 0) return false;
    for (int i = k + 1; i < n; ++i) {
      GaussianRational f = m.at(i, k) / piv;
      for (int j = k; j < n; ++j) m.at(i, j) -= f * m.at(k, j);
    }
  }
  return true;
}

template <class F>
LinearGK<F> make_gk(const Matrix<F>& j1, const Matrix<F>& j2) {
  return LinearGK<F>{j1, j2, -(j1 * j2)};
}

/// Structural checks common to both coefficient fields; positivity is
/// finished by the field-specific wrappers below.
template <class F>
GkReport gk_structure_report(const LinearGK<F>& gk) {
  GkReport rep;
  rep.j1 = is_gcs(gk.j1);
  rep.j2 = is_gcs(gk.j2);
  rep.commute_ok = (gk.j1 * gk.j2 - gk.j2 * gk.j1).is_zero();
  Matrix<F> g = -(gk.j1 * gk.j2);
  rep.metric_square_ok =
      g == gk.g && (g * g - Matrix<F>::identity(g.rows(), g.proto())).is_zero();
  int n = g.rows() / 2;
  Matrix<F> p = natural_pairing_matrix(n, g.proto());
  Matrix<F> form = g.transpose() * p;  // <Gv, w> = v^T G^T P w
  rep.metric_sym_ok = (form - form.transpose()).is_zero();
  return rep;
}

inline GkReport is_gk(const LinearGK<GaussianRational>& gk) {
  GkReport rep = gk_structure_report(gk);
  int n = gk.g.rows() / 2;
  Matrix<GaussianRational> p = natural_pairing_matrix(n, gk.g.proto());
  rep.positivity_ok = positive_definite(gk.g.transpose() * p);
  rep.positivity_points = 0;  // exact, not sampled
  return rep;
}

/// Random constant-coefficient GK instance in base dimension n (n even):
/// a Kahler pair (complex-type J, symplectic-type for omega = g J0 with a
/// random J0-compatible positive metric g) sheared by random skew B and
/// beta transforms. Always a valid GK structure by construction.
inline LinearGK<GaussianRational> random_gk(std::mt19937_64& rng, int n) {
  if (n % 2 != 0) throw std::invalid_argument("random_gk: base dimension must be even");
  int m = n / 2;
  GaussianRational proto(0);
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 3);
  auto rnd = [&] { return GaussianRational::from_fraction(num(rng), den(rng)); };

  // J0 = [[0, -I], [I, 0]] on V
  Matrix<GaussianRational> j0(n, n, proto);
  for (int i = 0; i < m; ++i) {
    j0.at(i, m + i) = GaussianRational(-1);
    j0.at(m + i, i) = GaussianRational(1);
  }
  // A commuting with J0: [[P, -Q], [Q, P]]
  Matrix<GaussianRational> a(n, n, proto);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      GaussianRational pp = rnd(), qq = rnd();
      a.at(i, j) = pp;
      a.at(m + i, m + j) = pp;
      a.at(i, m + j) = -qq;
      a.at(m + i, j) = qq;
    }
  // g = A^T A + I: symmetric, positive, commutes with J0
  Matrix<GaussianRational> g =
      a.transpose() * a + Matrix<GaussianRational>::identity(n, proto);
  // omega = -g J0 so that G = -J1 J2 = [[0, g^-1], [g, 0]] is positive
  Matrix<GaussianRational> omega = -(g * j0);

  Matrix<GaussianRational> j1 = gcs_from_complex(j0);
  Matrix<GaussianRational> j2 = gcs_from_symplectic(omega);

  auto random_skew = [&] {
    Matrix<GaussianRational> s(n, n, proto);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        GaussianRational v = rnd();
        s.at(i, j) = v;
        s.at(j, i) = -v;
      }
    return s;
  };
  Matrix<GaussianRational> shear =
      b_transform_matrix(random_skew()) * beta_transform_matrix(random_skew());
  return make_gk(conjugate(shear, j1), conjugate(shear, j2));
}

}  // namespace gg
