#pragma once

#include <map>
#include <string>
#include <vector>

#include "gg/chart.hpp"

namespace gg {

/// Strictly increasing tuple of coordinate indices: a wedge monomial.
/// The empty tuple is the degree-0 monomial.
using WedgeIdx = std::vector<int>;

struct WedgeIdxLess {
  bool operator()(const WedgeIdx& a, const WedgeIdx& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

class VectorField;

/// Inhomogeneous exterior-algebra element on a chart. Mixed degree is
/// permitted (spinors are inhomogeneous forms); zero coefficients are never
/// stored, so equality is structural.
class DiffForm {
 public:
  using TermMap = std::map<WedgeIdx, Coeff, WedgeIdxLess>;

  explicit DiffForm(ChartPtr chart) : chart_(std::move(chart)) {}
  DiffForm(ChartPtr chart, const Coeff& scalar) : chart_(std::move(chart)) {
    set_term({}, scalar);
  }

  static DiffForm coordinate_differential(const ChartPtr& chart, int i) {
    DiffForm f(chart);
    f.set_term({i}, chart->one());
    return f;
  }

  const ChartPtr& chart() const { return chart_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// True when every term has the given degree (vacuously for 0).
  bool is_homogeneous(int degree) const {
    for (const auto& [idx, c] : terms_)
      if (static_cast<int>(idx.size()) != degree) return false;
    return true;
  }
  int max_degree() const {
    int d = 0;
    for (const auto& [idx, c] : terms_) d = std::max<int>(d, idx.size());
    return d;
  }
  Coeff scalar_part() const {
    auto it = terms_.find({});
    return it == terms_.end() ? chart_->zero() : it->second;
  }
  /// The degree-k homogeneous component.
  DiffForm component(int k) const;

  void set_term(const WedgeIdx& idx, const Coeff& c) {
    if (c.is_zero())
      terms_.erase(idx);
    else
      terms_.insert_or_assign(idx, c);
  }
  void add_term(const WedgeIdx& idx, const Coeff& c);

  DiffForm operator-() const;
  friend DiffForm operator+(const DiffForm& a, const DiffForm& b);
  friend DiffForm operator-(const DiffForm& a, const DiffForm& b);
  DiffForm operator*(const Coeff& c) const;
  friend bool operator==(const DiffForm& a, const DiffForm& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const DiffForm& a, const DiffForm& b) { return !(a == b); }

  std::string str() const;

 private:
  ChartPtr chart_;
  TermMap terms_;
};

/// Vector field: one coefficient function per chart coordinate.
class VectorField {
 public:
  explicit VectorField(ChartPtr chart)
      : chart_(std::move(chart)), comps_(chart_->dim(), chart_->zero()) {}
  VectorField(ChartPtr chart, std::vector<Coeff> comps)
      : chart_(std::move(chart)), comps_(std::move(comps)) {
    if (static_cast<int>(comps_.size()) != chart_->dim())
      throw std::invalid_argument("VectorField: component count != chart dimension");
  }

  static VectorField coordinate_field(const ChartPtr& chart, int i) {
    VectorField v(chart);
    v.comps_[i] = chart->one();
    return v;
  }

  const ChartPtr& chart() const { return chart_; }
  const Coeff& component(int i) const { return comps_[i]; }
  void set_component(int i, const Coeff& c) { comps_[i] = c; }
  bool is_zero() const {
    for (const auto& c : comps_)
      if (!c.is_zero()) return false;
    return true;
  }

  VectorField operator-() const;
  friend VectorField operator+(const VectorField& a, const VectorField& b);
  friend VectorField operator-(const VectorField& a, const VectorField& b);
  VectorField operator*(const Coeff& c) const;
  friend bool operator==(const VectorField& a, const VectorField& b) {
    return a.comps_ == b.comps_;
  }
  friend bool operator!=(const VectorField& a, const VectorField& b) { return !(a == b); }

  /// Directional derivative X(f).
  Coeff apply(const Coeff& f) const;

  std::string str() const;

 private:
  ChartPtr chart_;
  std::vector<Coeff> comps_;
};

void require_same_chart(const ChartPtr& a, const ChartPtr& b);

DiffForm wedge(const DiffForm& a, const DiffForm& b);
DiffForm exterior_d(const DiffForm& a);
DiffForm interior(const VectorField& x, const DiffForm& a);
DiffForm lie_derivative(const VectorField& x, const DiffForm& a);
VectorField vf_bracket(const VectorField& x, const VectorField& y);

/// Substitution of all full coordinates; angle differentials survive with
/// constant coefficients.
DiffForm evaluate(const DiffForm& a, const std::vector<GaussianRational>& point);

struct BasicReport {
  bool horizontal = true;
  bool invariant = true;
};

/// A form descends along the verticals iff it is both horizontal and
/// invariant.
BasicReport basic_check(const DiffForm& a, const std::vector<VectorField>& verticals);

}  // namespace gg
