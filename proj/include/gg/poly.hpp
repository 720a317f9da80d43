#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gg/rational.hpp"

namespace gg {

/// Exponent vector; length equals the number of variables of the polynomial.
using Exps = std::vector<int>;

/// Graded-lexicographic order, descending (leading monomial first).
struct GrlexGreater {
  bool operator()(const Exps& a, const Exps& b) const {
    int da = 0, db = 0;
    for (int e : a) da += e;
    for (int e : b) db += e;
    if (da != db) return da > db;
    return a > b;  // lex on equal total degree
  }
};

/// Multivariate polynomial over the Gaussian rationals in a fixed number of
/// variables. Terms are kept in descending graded-lex order; zero
/// coefficients are never stored, so equality is structural.
class Poly {
 public:
  using TermMap = std::map<Exps, GaussianRational, GrlexGreater>;

  explicit Poly(int nvars) : nvars_(nvars) {}
  Poly(int nvars, const GaussianRational& c) : nvars_(nvars) {
    if (!c.is_zero()) terms_[Exps(nvars, 0)] = c;
  }

  static Poly variable(int nvars, int var, int exp = 1) {
    Poly p(nvars);
    Exps e(nvars, 0);
    e.at(var) = exp;
    p.terms_[e] = GaussianRational(1);
    return p;
  }

  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree() == 0);
  }
  GaussianRational constant_value() const {
    if (terms_.empty()) return GaussianRational(0);
    return terms_.begin()->second;
  }

  int total_degree() const {
    if (terms_.empty()) return -1;
    int d = 0;
    for (int e : terms_.begin()->first) d += e;
    return d;
  }
  int degree_in(int var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return terms_.empty() ? -1 : d;
  }

  /// Leading coefficient in graded-lex order.
  const GaussianRational& leading_coeff() const { return terms_.begin()->second; }
  const Exps& leading_monomial() const { return terms_.begin()->first; }

  void add_term(const Exps& e, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator*(const GaussianRational& c) const;
  friend bool operator==(const Poly& a, const Poly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
  /// Deterministic order for canonical container keys.
  friend bool operator<(const Poly& a, const Poly& b);

  Poly pow(int e) const;
  Poly derivative(int var) const;
  GaussianRational eval(const std::vector<GaussianRational>& point) const;
  /// Substitute polynomials for all variables (target nvars taken from args).
  Poly compose(const std::vector<Poly>& values) const;

  std::string str(const std::vector<std::string>& names) const;

 private:
  int nvars_;
  TermMap terms_;
};

/// Exact quotient; nullopt when b does not divide a.
std::optional<Poly> poly_divide_exact(const Poly& a, const Poly& b);

/// GCD over Q(i)[x1..xn], normalized so the graded-lex leading coefficient
/// is 1. gcd(0,0) = 0 by convention.
Poly poly_gcd(const Poly& a, const Poly& b);

}  // namespace gg
