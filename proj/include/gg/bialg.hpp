#pragma once

#include <string>
#include <vector>

#include "gg/matrix.hpp"
#include "gg/rational.hpp"

namespace gg {

/// Rank-3 array over exact scalars, used for structure constants and the
/// Yang-Baxter obstruction.
struct Tensor3 {
  int n = 0;
  std::vector<GaussianRational> v;

  explicit Tensor3(int n_) : n(n_), v(n_ * n_ * n_, GaussianRational(0)) {}
  GaussianRational& at(int i, int j, int k) { return v[(i * n + j) * n + k]; }
  const GaussianRational& at(int i, int j, int k) const { return v[(i * n + j) * n + k]; }
  bool is_zero() const {
    for (const auto& x : v)
      if (!x.is_zero()) return false;
    return true;
  }
};

struct JacobiReport {
  // one entry per (i, j, k, m) with nonzero residual, as "i,j,k -> m: value"
  std::vector<std::string> violations;
  bool antisymmetric = true;
  bool ok() const { return violations.empty() && antisymmetric; }
};

/// Antisymmetry and Jacobi residuals of raw structure constants c.at(i,j,k)
/// = c^k_{ij}.
JacobiReport jacobi_check(const Tensor3& c);

/// Finite-dimensional Lie algebra by structure constants; validated at
/// construction.
struct LieAlgebraData {
  int dim;
  Tensor3 c;  // c.at(i,j,k) = c^k_{ij}

  LieAlgebraData(int dim_, Tensor3 c_);

  std::vector<GaussianRational> bracket(const std::vector<GaussianRational>& x,
                                        const std::vector<GaussianRational>& y) const;
};

/// r in g (x) g with its symmetric and antisymmetric halves.
struct RMatrix {
  Matrix<GaussianRational> r, s, a;

  explicit RMatrix(const Matrix<GaussianRational>& r_);
};

struct CybeReport {
  Tensor3 obstruction;  // [[r, r]]
  bool cybe_zero = false;
  bool s_ad_invariant = false;
  bool s_invertible = false;
  bool factorizable() const { return cybe_zero && s_ad_invariant && s_invertible; }
};

/// Classical Yang-Baxter obstruction [[r,r]] = [r12,r13]+[r12,r23]+[r13,r23].
CybeReport cybe_obstruction(const LieAlgebraData& g, const RMatrix& r);

struct CocommutatorReport {
  Tensor3 delta;      // delta.at(m,a,b): coefficient of e_a (x) e_b in ad_{e_m} r
  Tensor3 dual_c;     // dual_c.at(a,b,m) = chat^m_{ab}, bracket on g-hat
  bool antisymmetric = false;
  bool dual_jacobi = false;
  bool ok() const { return antisymmetric && dual_jacobi; }
};

/// Coboundary cocommutator delta = ad r and the induced dual bracket.
CocommutatorReport cocommutator(const LieAlgebraData& g, const RMatrix& r);

struct ManinTripleData {
  int n;                                 // dim of each factor
  LieAlgebraData big;                    // g + g, componentwise bracket
  Matrix<GaussianRational> pairing;      // invariant symmetric pairing
  Matrix<GaussianRational> embed_g;      // tau -> (tau, tau)
  Matrix<GaussianRational> embed_ghat;   // omega -> (r+ omega, r- omega)
  bool subalgebras_ok = false;
  bool isotropic_ok = false;
  bool invariant_ok = false;
  bool spans_ok = false;
  bool duality_ok = false;  // cross pairing of embeddings = identity
  bool ok() const {
    return subalgebras_ok && isotropic_ok && invariant_ok && spans_ok && duality_ok;
  }
};

/// Double of a factorizable r-matrix; throws when factorizability fails.
ManinTripleData manin_triple(const LieAlgebraData& g, const RMatrix& r);

struct CommutingReport {
  bool hypothesis = false;  // [image g, image g-hat] = 0
  bool abelian = false;     // only meaningful when hypothesis holds
};

/// When the two images commute the whole double must be abelian; a violation
/// is a hard logic error.
CommutingReport commuting_abelian_check(const ManinTripleData& triple);

/// sl2 in the basis (H, E, F): [H,E] = 2E, [H,F] = -2F, [E,F] = H.
LieAlgebraData sl2();

/// The standard factorizable r-matrix E (x) F + 1/4 H (x) H.
RMatrix sl2_standard_r();

LieAlgebraData abelian_algebra(int n);

}  // namespace gg
