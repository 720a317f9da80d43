#include "gg/bialg.hpp"

#include <stdexcept>

namespace gg {

JacobiReport jacobi_check(const Tensor3& c) {
  JacobiReport rep;
  int n = c.n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (!(c.at(i, j, k) + c.at(j, i, k)).is_zero()) rep.antisymmetric = false;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          GaussianRational res(0);
          for (int m = 0; m < n; ++m)
            res += c.at(i, j, m) * c.at(m, k, l) + c.at(j, k, m) * c.at(m, i, l) +
                   c.at(k, i, m) * c.at(m, j, l);
          if (!res.is_zero())
            rep.violations.push_back(std::to_string(i) + "," + std::to_string(j) + "," +
                                     std::to_string(k) + " -> " + std::to_string(l) +
                                     ": " + res.str());
        }
  return rep;
}

LieAlgebraData::LieAlgebraData(int dim_, Tensor3 c_) : dim(dim_), c(std::move(c_)) {
  if (c.n != dim) throw std::invalid_argument("LieAlgebraData: tensor size mismatch");
  JacobiReport rep = jacobi_check(c);
  if (!rep.antisymmetric)
    throw std::invalid_argument("LieAlgebraData: structure constants not antisymmetric");
  if (!rep.violations.empty())
    throw std::invalid_argument("LieAlgebraData: Jacobi fails at " + rep.violations[0]);
}

std::vector<GaussianRational> LieAlgebraData::bracket(
    const std::vector<GaussianRational>& x, const std::vector<GaussianRational>& y) const {
  std::vector<GaussianRational> z(dim, GaussianRational(0));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k) z[k] += c.at(i, j, k) * x[i] * y[j];
  return z;
}

RMatrix::RMatrix(const Matrix<GaussianRational>& r_)
    : r(r_), s(r_.rows(), r_.cols(), GaussianRational(0)),
      a(r_.rows(), r_.cols(), GaussianRational(0)) {
  if (r.rows() != r.cols()) throw std::invalid_argument("RMatrix: not square");
  GaussianRational half = GaussianRational::from_fraction(1, 2);
  for (int i = 0; i < r.rows(); ++i)
    for (int j = 0; j < r.cols(); ++j) {
      s.at(i, j) = (r.at(i, j) + r.at(j, i)) * half;
      a.at(i, j) = (r.at(i, j) - r.at(j, i)) * half;
    }
}

CybeReport cybe_obstruction(const LieAlgebraData& g, const RMatrix& rm) {
  int n = g.dim;
  const Tensor3& c = g.c;
  const Matrix<GaussianRational>& r = rm.r;
  CybeReport rep{Tensor3(n), false, false, false};
  // [r12, r13]^{m j l} = c^m_{ik} r^{ij} r^{kl}
  // [r12, r23]^{i m l} = c^m_{jk} r^{ij} r^{kl}
  // [r13, r23]^{i k m} = c^m_{jl} r^{ij} r^{kl}
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          GaussianRational rr = r.at(i, j) * r.at(k, l);
          if (rr.is_zero()) continue;
          for (int m = 0; m < n; ++m) {
            rep.obstruction.at(m, j, l) += c.at(i, k, m) * rr;
            rep.obstruction.at(i, m, l) += c.at(j, k, m) * rr;
            rep.obstruction.at(i, k, m) += c.at(j, l, m) * rr;
          }
        }
  rep.cybe_zero = rep.obstruction.is_zero();

  rep.s_ad_invariant = true;
  for (int m = 0; m < n && rep.s_ad_invariant; ++m)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        GaussianRational res(0);
        for (int i = 0; i < n; ++i)
          res += c.at(m, i, a) * rm.s.at(i, b) + c.at(m, i, b) * rm.s.at(a, i);
        if (!res.is_zero()) rep.s_ad_invariant = false;
      }
  rep.s_invertible = rm.s.inverse().has_value();
  return rep;
}

CocommutatorReport cocommutator(const LieAlgebraData& g, const RMatrix& rm) {
  int n = g.dim;
  const Tensor3& c = g.c;
  CocommutatorReport rep{Tensor3(n), Tensor3(n), true, false};
  for (int m = 0; m < n; ++m)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        GaussianRational res(0);
        for (int i = 0; i < n; ++i)
          res += c.at(m, i, a) * rm.r.at(i, b) + c.at(m, i, b) * rm.r.at(a, i);
        rep.delta.at(m, a, b) = res;
      }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int m = 0; m < n; ++m) rep.dual_c.at(a, b, m) = rep.delta.at(m, a, b);
  JacobiReport jr = jacobi_check(rep.dual_c);
  rep.antisymmetric = jr.antisymmetric;
  rep.dual_jacobi = jr.violations.empty();
  return rep;
}

namespace {

Tensor3 double_constants(const LieAlgebraData& g) {
  int n = g.dim;
  Tensor3 big(2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        big.at(i, j, k) = g.c.at(i, j, k);
        big.at(n + i, n + j, n + k) = g.c.at(i, j, k);
      }
  return big;
}

bool in_column_span(const Matrix<GaussianRational>& cols,
                    const std::vector<GaussianRational>& v) {
  return cols.solve(v).has_value();
}

}  // namespace

ManinTripleData manin_triple(const LieAlgebraData& g, const RMatrix& rm) {
  CybeReport cy = cybe_obstruction(g, rm);
  if (!cy.factorizable())
    throw std::invalid_argument("manin_triple: r-matrix is not factorizable");
  int n = g.dim;
  GaussianRational zero(0), half = GaussianRational::from_fraction(1, 2);

  LieAlgebraData big(2 * n, double_constants(g));
  auto sinv = *rm.s.inverse();

  Matrix<GaussianRational> pairing(2 * n, 2 * n, zero);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      pairing.at(i, j) = sinv.at(i, j) * half;
      pairing.at(n + i, n + j) = -sinv.at(i, j) * half;
    }

  Matrix<GaussianRational> eg(2 * n, n, zero), eh(2 * n, n, zero);
  Matrix<GaussianRational> rplus = rm.a + rm.s, rminus = rm.a - rm.s;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      eg.at(i, j) = GaussianRational(i == j ? 1 : 0);
      eg.at(n + i, j) = GaussianRational(i == j ? 1 : 0);
      eh.at(i, j) = rplus.at(i, j);
      eh.at(n + i, j) = rminus.at(i, j);
    }

  ManinTripleData tr{n,  std::move(big), std::move(pairing), std::move(eg),
                     std::move(eh), false, false, false, false, false};

  tr.subalgebras_ok = true;
  for (const auto* emb : {&tr.embed_g, &tr.embed_ghat})
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (!in_column_span(*emb, tr.big.bracket(emb->col(i), emb->col(j))))
          tr.subalgebras_ok = false;

  tr.isotropic_ok =
      (tr.embed_g.transpose() * tr.pairing * tr.embed_g).is_zero() &&
      (tr.embed_ghat.transpose() * tr.pairing * tr.embed_ghat).is_zero();

  tr.duality_ok = tr.embed_g.transpose() * tr.pairing * tr.embed_ghat ==
                  Matrix<GaussianRational>::identity(n, zero);

  Matrix<GaussianRational> joint(2 * n, 2 * n, zero);
  for (int i = 0; i < 2 * n; ++i)
    for (int j = 0; j < n; ++j) {
      joint.at(i, j) = tr.embed_g.at(i, j);
      joint.at(i, n + j) = tr.embed_ghat.at(i, j);
    }
  tr.spans_ok = joint.inverse().has_value();

  tr.invariant_ok = true;
  int d = 2 * n;
  auto basis = [&](int i) {
    std::vector<GaussianRational> e(d, zero);
    e[i] = GaussianRational(1);
    return e;
  };
  auto pair = [&](const std::vector<GaussianRational>& x,
                  const std::vector<GaussianRational>& y) {
    GaussianRational acc(0);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) acc += x[i] * tr.pairing.at(i, j) * y[j];
    return acc;
  };
  for (int x = 0; x < d && tr.invariant_ok; ++x)
    for (int y = 0; y < d; ++y)
      for (int z = 0; z < d; ++z) {
        GaussianRational res = pair(tr.big.bracket(basis(x), basis(y)), basis(z)) +
                               pair(basis(y), tr.big.bracket(basis(x), basis(z)));
        if (!res.is_zero()) tr.invariant_ok = false;
      }
  return tr;
}

CommutingReport commuting_abelian_check(const ManinTripleData& tr) {
  CommutingReport rep;
  int n = tr.n;
  auto zerovec = [&](const std::vector<GaussianRational>& v) {
    for (const auto& x : v)
      if (!x.is_zero()) return false;
    return true;
  };
  rep.hypothesis = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!zerovec(tr.big.bracket(tr.embed_g.col(i), tr.embed_ghat.col(j))))
        rep.hypothesis = false;
  if (!rep.hypothesis) return rep;
  rep.abelian = true;
  for (const auto* emb : {&tr.embed_g, &tr.embed_ghat})
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (!zerovec(tr.big.bracket(emb->col(i), emb->col(j)))) rep.abelian = false;
  if (!rep.abelian)
    throw std::logic_error(
        "commuting_abelian_check: commuting images but non-abelian double");
  return rep;
}

LieAlgebraData sl2() {
  Tensor3 c(3);
  // basis (H, E, F)
  c.at(0, 1, 1) = GaussianRational(2);
  c.at(1, 0, 1) = GaussianRational(-2);
  c.at(0, 2, 2) = GaussianRational(-2);
  c.at(2, 0, 2) = GaussianRational(2);
  c.at(1, 2, 0) = GaussianRational(1);
  c.at(2, 1, 0) = GaussianRational(-1);
  return LieAlgebraData(3, std::move(c));
}

RMatrix sl2_standard_r() {
  Matrix<GaussianRational> r(3, 3, GaussianRational(0));
  r.at(1, 2) = GaussianRational(1);                      // E (x) F
  r.at(0, 0) = GaussianRational::from_fraction(1, 4);    // 1/4 H (x) H
  return RMatrix(r);
}

LieAlgebraData abelian_algebra(int n) { return LieAlgebraData(n, Tensor3(n)); }

}  // namespace gg
