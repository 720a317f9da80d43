#pragma once

#include <string>
#include <vector>

#include "gg/courant.hpp"
#include "gg/lemmas.hpp"

namespace gg {

/// Abelian bi-Hamiltonian action data on an invariant chart model: the T
/// family of moments is J1-Hamiltonian, the T-hat family J2-Hamiltonian.
struct TorusActionData {
  ChartPtr chart;
  Matrix<Coeff> j1, j2;
  TwistData tw;
  std::vector<Coeff> moments;      // T family, sections J1(df)
  std::vector<Coeff> moments_hat;  // T-hat family, sections J2(df)
};

struct MomentSections {
  std::vector<GenSection> xs;     // J1(df_j)
  std::vector<GenSection> xhats;  // J2(dfhat_j)
  std::vector<GenSection> all() const {
    std::vector<GenSection> v = xs;
    v.insert(v.end(), xhats.begin(), xhats.end());
    return v;
  }
};

/// X_j = J_tag(df_j), stacked covector (0, df) pushed through the structure
/// matrix. Throws when some df vanishes identically.
MomentSections moment_sections(const TorusActionData& act);

struct HamiltonianReport {
  bool isotropy_ok = true;        // iota_{X_j} df_k + iota_{X_k} df_j = 0
  bool brackets_ok = true;        // all pairwise *_H brackets vanish
  bool twist_invariant_ok = true; // L_{X_j} H = 0
  bool splitting_ok = true;       // d xi_j = iota_{X_j} H
  bool equivariance_ok = true;    // X_j *_H (family span) stays in span
  bool ok() const {
    return isotropy_ok && brackets_ok && twist_invariant_ok && splitting_ok &&
           equivariance_ok;
  }
};

HamiltonianReport hamiltonian_checks(const TorusActionData& act,
                                     const MomentSections& secs);

struct PairingReport {
  Matrix<Coeff> entries;           // P_jk = 2<xs_j, xhats_k>, symbolic
  Matrix<GaussianRational> p;      // constant values, valid when constant_ok
  bool constant_ok = true;
  std::string nonconstant_entry;   // first offender "j,k: d-value"
  bool invertible = false;
  bool ok() const { return constant_ok && invertible; }
};

PairingReport pairing_P(const std::vector<GenSection>& xs,
                        const std::vector<GenSection>& xhats);

/// The reduction pipeline input: generator sections and connection forms on
/// the level-set chart, plus the twist.
struct ReductionData {
  TwistData tw;
  std::vector<GenSection> xs, xhats;
  std::vector<DiffForm> theta, theta_hat;
};

struct ConnectionReport {
  bool dual_ok = true;       // iota_{X_j} Theta_k = delta_jk, same hatted
  bool invariant_ok = true;  // L_X Theta = 0, every generator vs every form
  Matrix<Coeff> cross_t_hat;  // recorded iota_{X_j} ThetaHat_k
  Matrix<Coeff> cross_hat_t;  // recorded iota_{Xhat_j} Theta_k
  bool ok() const { return dual_ok && invariant_ok; }
};

ConnectionReport connection_check(const ReductionData& rd);

struct BTildeReport {
  DiffForm b;
  bool invariant_ok = true;   // L_X Btilde = 0 for all generators
  bool horizontal_ok = true;  // prod_j (1 - Theta_j ^ iota_{X_j}) Btilde = 0
  bool ok() const { return invariant_ok && horizontal_ok; }
};

/// Btilde = (Theta^xi - 1/2 sum Theta_j^Theta_k iota_{X_k}xi_j) + hatted.
BTildeReport b_tilde(const ReductionData& rd);

enum class Side { T, That };

struct ReducedTwistReport {
  DiffForm form;          // Htilde + d(Theta ^ xi') or hatted
  bool basic_ok = true;   // iota and L vanish against the quotiented torus
  int obstructing = -1;   // generator index of the first basicness failure
  bool ok() const { return basic_ok; }
};

ReducedTwistReport reduced_twisting(const ReductionData& rd, const DiffForm& btilde,
                                    Side side);

struct DualityReport {
  ConnectionReport conn;
  BTildeReport btilde;
  ReducedTwistReport h;      // side T: represents pi^* h
  ReducedTwistReport hhat;   // side T-hat: represents pihat^* hhat
  DiffForm residual;         // pihat^* hhat - pi^* h - d(ThetaHat ^ Theta)
  PairingReport pairing;
  bool families_isotropic = true;  // each generator family is isotropic
  bool ok() const {
    return conn.ok() && btilde.ok() && h.ok() && hhat.ok() && pairing.ok() &&
           families_isotropic && residual.is_zero();
  }
};

/// End-to-end duality identity on the invariant chart model; ThetaHat ^ Theta
/// contracts through the pairing P.
DualityReport duality_check(const ReductionData& rd);

struct TransformResult {
  bool g_orthogonal = false;  // g^T P_split g = P_split for the section pairing
  std::optional<ReductionData> data;
  std::optional<DualityReport> report;
  bool ok() const { return g_orthogonal && report && report->ok(); }
};

/// Change of generator lattice basis by g (columns = new generators in the
/// old combined basis, T family first); connection forms transform by the
/// inverse transpose so duality of frames is preserved.
TransformResult tduality_transform(const Matrix<GaussianRational>& g,
                                   const ReductionData& rd);

/// b-shear element of O(m,m;Z): new X_j = X_j + sum_k b_kj XhatD_k, hatted
/// generators unchanged.
Matrix<GaussianRational> bshear_element(const Matrix<GaussianRational>& b);

enum class SubtorusMode { Isotropic, Nondegenerate };

struct SubtorusReport {
  Matrix<Coeff> gram{0, 0, Coeff(0)};  // <k'_i, k'_j> on the subtorus sections
  bool case1_applies = false;  // isotropic route hypotheses hold
  bool case2_applies = false;  // nondegenerate route hypotheses hold
  SubtorusMode mode = SubtorusMode::Isotropic;
  bool lemma_ok = false;       // delegated fiberwise conclusion, requested mode
  bool ok() const {
    return (mode == SubtorusMode::Isotropic ? case1_applies : case2_applies) &&
           lemma_ok;
  }
};

/// K = span(df_j) in V*, K' = integer combinations of the combined generator
/// sections; routes to the extension lemma (isotropic case) or the
/// missing-rank lemma (nondegenerate case) over the function field.
SubtorusReport subtorus_reduction_check(const ChartPtr& chart,
                                        const std::vector<Coeff>& moments,
                                        const std::vector<GenSection>& sections,
                                        const std::vector<std::vector<long>>& basis,
                                        SubtorusMode mode);

struct GcsTypeReport {
  bool complex_type = false;     // both off-diagonal blocks vanish
  bool symplectic_type = false;  // B-free image of gcs_from_symplectic
};

/// Block classification of a constant GCS matrix in a split basis.
GcsTypeReport classify_gcs(const Matrix<GaussianRational>& j);

}  // namespace gg
