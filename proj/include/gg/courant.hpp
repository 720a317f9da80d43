#pragma once

#include <optional>
#include <vector>

#include "gg/diffform.hpp"
#include "gg/matrix.hpp"
#include "gg/subspace.hpp"

namespace gg {

/// Section X + xi of TM + T*M.
struct GenSection {
  VectorField x;
  DiffForm xi;

  GenSection(VectorField x_, DiffForm xi_) : x(std::move(x_)), xi(std::move(xi_)) {
    require_same_chart(x.chart(), xi.chart());
    if (!xi.is_homogeneous(1))
      throw std::invalid_argument("GenSection: xi must be a 1-form");
  }
  static GenSection zero(const ChartPtr& chart) {
    return GenSection(VectorField(chart), DiffForm(chart));
  }
  const ChartPtr& chart() const { return x.chart(); }

  GenSection operator-() const { return GenSection(-x, -xi); }
  friend GenSection operator+(const GenSection& a, const GenSection& b) {
    return GenSection(a.x + b.x, a.xi + b.xi);
  }
  friend GenSection operator-(const GenSection& a, const GenSection& b) {
    return GenSection(a.x - b.x, a.xi - b.xi);
  }
  GenSection operator*(const Coeff& c) const { return GenSection(x * c, xi * c); }
  friend bool operator==(const GenSection& a, const GenSection& b) {
    return a.x == b.x && a.xi == b.xi;
  }
  friend bool operator!=(const GenSection& a, const GenSection& b) { return !(a == b); }
  bool is_zero() const { return x.is_zero() && xi.is_zero(); }

  /// Stacked (X-components, xi-components) fiber vector.
  std::vector<Coeff> stacked() const;
  static GenSection from_stacked(const ChartPtr& chart, const std::vector<Coeff>& v);
};

/// Closed 3-form twist.
class TwistData {
 public:
  explicit TwistData(DiffForm h) : h_(std::move(h)) {
    if (!h_.is_homogeneous(3)) throw std::invalid_argument("TwistData: H must be a 3-form");
    if (!exterior_d(h_).is_zero()) throw std::invalid_argument("TwistData: dH != 0");
  }
  static TwistData zero(const ChartPtr& chart) { return TwistData(DiffForm(chart)); }
  const DiffForm& h() const { return h_; }
  const ChartPtr& chart() const { return h_.chart(); }

 private:
  DiffForm h_;
};

/// (X, A) in the Lie algebra of generalized symmetries. Members of the
/// untwisted algebra have dA = 0 (closed()); psi_H images generally do not.
struct SymmetryPair {
  VectorField x;
  DiffForm a;

  SymmetryPair(VectorField x_, DiffForm a_) : x(std::move(x_)), a(std::move(a_)) {
    require_same_chart(x.chart(), a.chart());
    if (!a.is_homogeneous(2)) throw std::invalid_argument("SymmetryPair: A must be a 2-form");
  }
  bool closed() const { return exterior_d(a).is_zero(); }
  const ChartPtr& chart() const { return x.chart(); }
  friend bool operator==(const SymmetryPair& a, const SymmetryPair& b) {
    return a.x == b.x && a.a == b.a;
  }
};

/// <X+xi, Y+eta> = (iota_X eta + iota_Y xi)/2.
Coeff section_pairing(const GenSection& a, const GenSection& b);

/// (X+xi) *_H (Y+eta) = [X,Y] + L_X eta - iota_Y(d xi - iota_X H).
GenSection loday_bracket(const GenSection& a, const GenSection& b, const TwistData& tw);

/// Same bracket with the sign of the iota_X H term flipped; negative control
/// for the axiom suite.
GenSection loday_bracket_corrupted(const GenSection& a, const GenSection& b,
                                   const TwistData& tw);

struct AxiomsReport {
  int triples = 0;
  int jacobi_failures = 0;   // Leibniz/Jacobi identity
  int anchor_failures = 0;   // a(x)<y,z> = <x, y*z + z*y>
  int invariance_failures = 0;  // a(x)<y,z> = <x*y, z> + <y, x*z>
  bool ok() const {
    return jacobi_failures == 0 && anchor_failures == 0 && invariance_failures == 0;
  }
};

/// Checks the three Courant-algebroid axioms on all ordered triples.
AxiomsReport axioms_check(const std::vector<GenSection>& sections, const TwistData& tw,
                          bool corrupt = false);

/// [(X,A), (Y,B)]_H = ([X,Y], L_X B - L_Y A + d iota_Y iota_X H).
SymmetryPair symmetry_bracket(const SymmetryPair& p, const SymmetryPair& q,
                              const TwistData& tw);

/// psi_H(X, A) = (X, A + iota_X H).
SymmetryPair psi_map(const SymmetryPair& p, const TwistData& tw);

struct TranslReport {
  SymmetryPair lhs, rhs;
  bool ok() const { return lhs == rhs; }
};

/// [psi_H p, psi_H q]_{H+H'} = psi_H([p, q]_{H'}).
TranslReport psi_translate_check(const SymmetryPair& p, const SymmetryPair& q,
                                 const TwistData& h, const TwistData& hp);

/// Clifford action (X+xi) . rho = iota_X rho + xi ^ rho.
DiffForm clifford(const GenSection& a, const DiffForm& rho);

/// d_H rho = d rho - H ^ rho.
DiffForm d_twisted(const DiffForm& rho, const TwistData& tw);

struct AnnihilatorResult {
  Subspace<Coeff> space;  // inside the stacked 2*dim fiber
  bool pure = false;      // dimension equals dim
  bool isotropic = false;
};

/// Generic-point annihilator {section : section . rho = 0}.
AnnihilatorResult spinor_annihilator(const DiffForm& rho);

struct IntegrabilityResult {
  bool solvable = false;
  std::optional<GenSection> y;  // canonical representative (free vars zero)
};

/// Solve d_H rho = Y . rho for a section Y; exact residual re-verified.
IntegrabilityResult spinor_integrability(const DiffForm& rho, const TwistData& tw);

/// +i-eigenframe of a chart-level GCS matrix (2d x 2d over Coeff acting on
/// stacked fibers). Returns d sections with (J - iI) section = 0.
std::vector<GenSection> eigenframe(const Matrix<Coeff>& j, const ChartPtr& chart);

struct InvolutivityReport {
  int pairs = 0;
  int failures = 0;
  bool ok() const { return failures == 0; }
};

/// Involutivity of the +i-eigenbundle: <frame_a *_H frame_b, frame_c> = 0.
InvolutivityReport gcs_integrability(const Matrix<Coeff>& j, const ChartPtr& chart,
                                     const TwistData& tw);
InvolutivityReport frame_involutivity(const std::vector<GenSection>& frame,
                                      const TwistData& tw);

/// Infinitesimal action on sections: x o_H y = -(x *_H y).
GenSection infinitesimal_action(const GenSection& a, const GenSection& b,
                                const TwistData& tw);

/// Infinitesimal action on spinors: -L_X rho - (d xi - iota_X H) ^ rho.
DiffForm infinitesimal_action(const GenSection& a, const DiffForm& rho, const TwistData& tw);

/// Residual of x o_H rho = (-d_H + y.)(x . rho) - <x,y> rho, given the
/// integrability section y of rho.
DiffForm commu_residual(const GenSection& a, const DiffForm& rho, const TwistData& tw,
                        const GenSection& y);

}  // namespace gg
