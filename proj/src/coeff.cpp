#include "gg/coeff.hpp"

#include <cassert>
#include <stdexcept>

namespace gg {

Coeff::Coeff(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("Coeff: zero denominator");
  normalize();
}

void Coeff::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(nvars(), GaussianRational(1));
    return;
  }
  Poly g = poly_gcd(num_, den_);
  if (!g.is_constant()) {
    num_ = *poly_divide_exact(num_, g);
    den_ = *poly_divide_exact(den_, g);
  }
  GaussianRational lc = den_.leading_coeff();
  if (!lc.is_one()) {
    GaussianRational inv = GaussianRational(1) / lc;
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
}

Coeff Coeff::operator-() const {
  Coeff r = *this;
  r.num_ = -r.num_;
  return r;
}

Coeff operator+(const Coeff& a, const Coeff& b) {
  assert(a.nvars() == b.nvars());
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return Coeff(a.num_ + b.num_, a.den_);
  // Classic reduced addition: factor the common part of the denominators
  // so the final gcd only has to look at that part.
  Poly g = poly_gcd(a.den_, b.den_);
  if (g.is_constant()) return Coeff(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  Poly da = *poly_divide_exact(a.den_, g);
  Poly db = *poly_divide_exact(b.den_, g);
  Poly num = a.num_ * db + b.num_ * da;
  return Coeff(std::move(num), g * da * db);
}

Coeff operator-(const Coeff& a, const Coeff& b) { return a + (-b); }

Coeff operator*(const Coeff& a, const Coeff& b) {
  assert(a.nvars() == b.nvars());
  if (a.is_zero() || b.is_zero()) return Coeff(a.nvars());
  // Cross-reduce before multiplying; keeps gcd arguments small.
  Poly g1 = poly_gcd(a.num_, b.den_);
  Poly g2 = poly_gcd(b.num_, a.den_);
  Poly na = g1.is_constant() ? a.num_ : *poly_divide_exact(a.num_, g1);
  Poly db = g1.is_constant() ? b.den_ : *poly_divide_exact(b.den_, g1);
  Poly nb = g2.is_constant() ? b.num_ : *poly_divide_exact(b.num_, g2);
  Poly da = g2.is_constant() ? a.den_ : *poly_divide_exact(a.den_, g2);
  return Coeff(na * nb, da * db);
}

Coeff operator/(const Coeff& a, const Coeff& b) {
  if (b.is_zero()) throw std::domain_error("Coeff: division by zero");
  return a * b.inverse();
}

Coeff Coeff::inverse() const {
  if (is_zero()) throw std::domain_error("Coeff: inverse of zero");
  return Coeff(den_, num_);
}

Coeff Coeff::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  Coeff acc = one_like();
  Coeff base = *this;
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

Coeff Coeff::derivative(int var) const {
  // (n/d)' = (n'd - n d') / d^2
  Poly n = num_.derivative(var) * den_ - num_ * den_.derivative(var);
  return Coeff(std::move(n), den_ * den_);
}

GaussianRational Coeff::eval(const std::vector<GaussianRational>& point,
                             const std::vector<std::string>& names) const {
  GaussianRational d = den_.eval(point);
  if (d.is_zero()) {
    std::string what = "Coeff: denominator vanishes at evaluation point";
    if (!names.empty()) what += ": " + den_.str(names);
    throw std::domain_error(what);
  }
  return num_.eval(point) / d;
}

std::string Coeff::str(const std::vector<std::string>& names) const {
  if (den_.is_constant() && den_.constant_value().is_one()) return num_.str(names);
  auto wrap = [&](const Poly& p) {
    std::string s = p.str(names);
    if (p.terms().size() > 1) return "(" + s + ")";
    return s;
  };
  return wrap(num_) + "/" + wrap(den_);
}

}  // namespace gg
