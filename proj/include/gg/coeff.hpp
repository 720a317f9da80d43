#pragma once

#include <string>
#include <vector>

#include "gg/poly.hpp"

namespace gg {

/// Element of the fraction field Q(i)(x1..xn): numerator/denominator pair,
/// always normalized (gcd removed, denominator nonzero with graded-lex
/// leading coefficient 1). Zero-testing is therefore structural.
class Coeff {
 public:
  explicit Coeff(int nvars) : num_(nvars), den_(nvars, GaussianRational(1)) {}
  Coeff(int nvars, const GaussianRational& c)
      : num_(nvars, c), den_(nvars, GaussianRational(1)) {}
  Coeff(Poly num, Poly den);
  explicit Coeff(Poly num) : num_(std::move(num)), den_(num_.nvars(), GaussianRational(1)) {}

  static Coeff variable(int nvars, int var) { return Coeff(Poly::variable(nvars, var)); }

  int nvars() const { return num_.nvars(); }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_ == den_; }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  GaussianRational constant_value() const {
    return num_.constant_value() / den_.constant_value();
  }

  Coeff zero_like() const { return Coeff(nvars()); }
  Coeff one_like() const { return Coeff(nvars(), GaussianRational(1)); }

  Coeff operator-() const;
  friend Coeff operator+(const Coeff& a, const Coeff& b);
  friend Coeff operator-(const Coeff& a, const Coeff& b);
  friend Coeff operator*(const Coeff& a, const Coeff& b);
  friend Coeff operator/(const Coeff& a, const Coeff& b);
  Coeff& operator+=(const Coeff& o) { return *this = *this + o; }
  Coeff& operator-=(const Coeff& o) { return *this = *this - o; }
  Coeff& operator*=(const Coeff& o) { return *this = *this * o; }
  Coeff& operator/=(const Coeff& o) { return *this = *this / o; }

  friend bool operator==(const Coeff& a, const Coeff& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Coeff& a, const Coeff& b) { return !(a == b); }
  friend bool operator<(const Coeff& a, const Coeff& b) {
    if (a.num_ != b.num_) return a.num_ < b.num_;
    return a.den_ < b.den_;
  }

  Coeff inverse() const;
  Coeff pow(int e) const;
  Coeff derivative(int var) const;
  /// Throws std::domain_error naming the offending denominator when it
  /// vanishes at the point.
  GaussianRational eval(const std::vector<GaussianRational>& point,
                        const std::vector<std::string>& names = {}) const;

  std::string str(const std::vector<std::string>& names) const;

 private:
  void normalize();
  Poly num_, den_;
};

}  // namespace gg
