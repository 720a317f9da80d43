#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace gg {

/// Exact complex rational a + b*i with arbitrary-precision components.
/// All arithmetic is exact; mpq_class keeps fractions reduced with
/// positive denominators, so equality is plain component comparison.
class GaussianRational {
 public:
  GaussianRational() : re_(0), im_(0) {}
  GaussianRational(long v) : re_(v), im_(0) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(mpq_class re, mpq_class im = 0)
      : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return GaussianRational(0, 1); }
  static GaussianRational from_fraction(long num, long den) {
    mpq_class q(num, den);
    q.canonicalize();
    return GaussianRational(q);
  }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  /// Prototype helpers so generic field code works for both scalars and
  /// fraction-field coefficients.
  GaussianRational zero_like() const { return GaussianRational(0); }
  GaussianRational one_like() const { return GaussianRational(1); }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_one() const { return re_ == 1 && im_ == 0; }
  bool is_real() const { return im_ == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  /// |z|^2 as a rational.
  mpq_class norm() const { return re_ * re_ + im_ * im_; }

  GaussianRational operator-() const { return {-re_, -im_}; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    im_ = re_ * o.im_ + im_ * o.re_;
    re_ = r;
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) {
    if (o.is_zero()) throw std::domain_error("GaussianRational: division by zero");
    mpq_class n = o.norm();
    mpq_class r = (re_ * o.re_ + im_ * o.im_) / n;
    im_ = (im_ * o.re_ - re_ * o.im_) / n;
    re_ = r;
    return *this;
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
  /// Total order used only for canonical term ordering, not magnitude.
  friend bool operator<(const GaussianRational& a, const GaussianRational& b) {
    int c = cmp(a.re_, b.re_);
    if (c != 0) return c < 0;
    return cmp(a.im_, b.im_) < 0;
  }

  GaussianRational pow(long e) const {
    if (e < 0) return GaussianRational(1) / pow(-e);
    GaussianRational acc(1), base = *this;
    while (e > 0) {
      if (e & 1) acc *= base;
      base *= base;
      e >>= 1;
    }
    return acc;
  }

  std::string str() const {
    auto rat = [](const mpq_class& q) { return q.get_str(); };
    if (im_ == 0) return rat(re_);
    std::string imag = (im_ == 1) ? "i" : (im_ == -1 ? "-i" : rat(im_) + "*i");
    if (re_ == 0) return imag;
    if (im_ > 0) return rat(re_) + "+" + imag;
    return rat(re_) + imag;  // imag already carries the minus sign
  }

 private:
  mpq_class re_, im_;
};

}  // namespace gg
