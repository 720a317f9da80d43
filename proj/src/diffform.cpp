#include "gg/diffform.hpp"

#include <algorithm>
#include <sstream>

namespace gg {

void require_same_chart(const ChartPtr& a, const ChartPtr& b) {
  if (a != b)
    throw std::invalid_argument("chart mismatch: " + a->name() + " vs " + b->name());
}

void DiffForm::add_term(const WedgeIdx& idx, const Coeff& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(idx);
  if (it == terms_.end()) {
    terms_.emplace(idx, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

DiffForm DiffForm::component(int k) const {
  DiffForm r(chart_);
  for (const auto& [idx, c] : terms_)
    if (static_cast<int>(idx.size()) == k) r.terms_.emplace(idx, c);
  return r;
}

DiffForm DiffForm::operator-() const {
  DiffForm r(chart_);
  for (const auto& [idx, c] : terms_) r.terms_.emplace(idx, -c);
  return r;
}

DiffForm operator+(const DiffForm& a, const DiffForm& b) {
  require_same_chart(a.chart_, b.chart_);
  DiffForm r = a;
  for (const auto& [idx, c] : b.terms_) r.add_term(idx, c);
  return r;
}

DiffForm operator-(const DiffForm& a, const DiffForm& b) { return a + (-b); }

DiffForm DiffForm::operator*(const Coeff& c) const {
  DiffForm r(chart_);
  for (const auto& [idx, t] : terms_) r.add_term(idx, t * c);
  return r;
}

std::string DiffForm::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [idx, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    std::string mono;
    for (int i : idx) {
      if (!mono.empty()) mono += "^";
      mono += "d" + chart_->coord_name(i);
    }
    std::string cs = c.str(chart_->full_names());
    if (mono.empty()) {
      out << cs;
    } else if (cs == "1") {
      out << mono;
    } else {
      out << "(" << cs << ")*" << mono;
    }
  }
  return out.str();
}

VectorField VectorField::operator-() const {
  VectorField r(chart_);
  for (int i = 0; i < chart_->dim(); ++i) r.comps_[i] = -comps_[i];
  return r;
}

VectorField operator+(const VectorField& a, const VectorField& b) {
  require_same_chart(a.chart_, b.chart_);
  VectorField r(a.chart_);
  for (int i = 0; i < a.chart_->dim(); ++i) r.comps_[i] = a.comps_[i] + b.comps_[i];
  return r;
}

VectorField operator-(const VectorField& a, const VectorField& b) { return a + (-b); }

VectorField VectorField::operator*(const Coeff& c) const {
  VectorField r(chart_);
  for (int i = 0; i < chart_->dim(); ++i) r.comps_[i] = comps_[i] * c;
  return r;
}

Coeff VectorField::apply(const Coeff& f) const {
  Coeff acc = chart_->zero();
  for (int i = 0; i < chart_->dim(); ++i) {
    if (chart_->is_angle(i) || comps_[i].is_zero()) continue;
    acc += comps_[i] * chart_->partial(f, i);
  }
  return acc;
}

std::string VectorField::str() const {
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i < chart_->dim(); ++i) {
    if (comps_[i].is_zero()) continue;
    if (!first) out << " + ";
    first = false;
    std::string cs = comps_[i].str(chart_->full_names());
    if (cs == "1")
      out << "@" << chart_->coord_name(i);
    else
      out << "(" << cs << ")*@" << chart_->coord_name(i);
  }
  return first ? "0" : out.str();
}

namespace {

/// Merge two strictly increasing tuples; returns the sign of the shuffle or
/// 0 when they share an index.
int merge_wedge(const WedgeIdx& a, const WedgeIdx& b, WedgeIdx& out) {
  out.clear();
  out.reserve(a.size() + b.size());
  size_t ia = 0, ib = 0;
  int sign = 1;
  while (ia < a.size() && ib < b.size()) {
    if (a[ia] == b[ib]) return 0;
    if (a[ia] < b[ib]) {
      out.push_back(a[ia++]);
    } else {
      // b[ib] moves past the remaining entries of a
      if ((a.size() - ia) % 2 == 1) sign = -sign;
      out.push_back(b[ib++]);
    }
  }
  while (ia < a.size()) out.push_back(a[ia++]);
  while (ib < b.size()) out.push_back(b[ib++]);
  return sign;
}

}  // namespace

DiffForm wedge(const DiffForm& a, const DiffForm& b) {
  require_same_chart(a.chart(), b.chart());
  DiffForm r(a.chart());
  WedgeIdx merged;
  for (const auto& [ia, ca] : a.terms()) {
    for (const auto& [ib, cb] : b.terms()) {
      int sign = merge_wedge(ia, ib, merged);
      if (sign == 0) continue;
      Coeff c = ca * cb;
      if (sign < 0) c = -c;
      r.add_term(merged, c);
    }
  }
  return r;
}

DiffForm exterior_d(const DiffForm& a) {
  const ChartPtr& chart = a.chart();
  DiffForm r(chart);
  WedgeIdx merged;
  for (const auto& [idx, c] : a.terms()) {
    for (int i = 0; i < chart->dim(); ++i) {
      if (chart->is_angle(i)) continue;
      Coeff dc = chart->partial(c, i);
      if (dc.is_zero()) continue;
      int sign = merge_wedge({i}, idx, merged);
      if (sign == 0) continue;
      r.add_term(merged, sign < 0 ? -dc : dc);
    }
  }
  return r;
}

DiffForm interior(const VectorField& x, const DiffForm& a) {
  require_same_chart(x.chart(), a.chart());
  DiffForm r(a.chart());
  for (const auto& [idx, c] : a.terms()) {
    for (size_t j = 0; j < idx.size(); ++j) {
      const Coeff& comp = x.component(idx[j]);
      if (comp.is_zero()) continue;
      WedgeIdx rest;
      rest.reserve(idx.size() - 1);
      for (size_t k = 0; k < idx.size(); ++k)
        if (k != j) rest.push_back(idx[k]);
      Coeff t = c * comp;
      if (j % 2 == 1) t = -t;
      r.add_term(rest, t);
    }
  }
  return r;
}

DiffForm lie_derivative(const VectorField& x, const DiffForm& a) {
  return exterior_d(interior(x, a)) + interior(x, exterior_d(a));
}

VectorField vf_bracket(const VectorField& x, const VectorField& y) {
  require_same_chart(x.chart(), y.chart());
  VectorField r(x.chart());
  for (int k = 0; k < x.chart()->dim(); ++k)
    r.set_component(k, x.apply(y.component(k)) - y.apply(x.component(k)));
  return r;
}

DiffForm evaluate(const DiffForm& a, const std::vector<GaussianRational>& point) {
  DiffForm r(a.chart());
  const auto& names = a.chart()->full_names();
  for (const auto& [idx, c] : a.terms())
    r.add_term(idx, a.chart()->constant(c.eval(point, names)));
  return r;
}

BasicReport basic_check(const DiffForm& a, const std::vector<VectorField>& verticals) {
  BasicReport rep;
  for (const auto& v : verticals) {
    if (!interior(v, a).is_zero()) rep.horizontal = false;
    if (!lie_derivative(v, a).is_zero()) rep.invariant = false;
  }
  return rep;
}

}  // namespace gg
