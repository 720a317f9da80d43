#include "gg/poly.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace gg {

Poly Poly::operator-() const {
  Poly r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  assert(a.nvars_ == b.nvars_);
  Poly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, c);
  return r;
}

Poly operator-(const Poly& a, const Poly& b) {
  assert(a.nvars_ == b.nvars_);
  Poly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  assert(a.nvars_ == b.nvars_);
  Poly r(a.nvars_);
  Exps e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

Poly Poly::operator*(const GaussianRational& c) const {
  Poly r(nvars_);
  if (c.is_zero()) return r;
  for (const auto& [e, t] : terms_) r.terms_.emplace(e, t * c);
  return r;
}

bool operator<(const Poly& a, const Poly& b) {
  if (a.nvars_ != b.nvars_) return a.nvars_ < b.nvars_;
  auto ia = a.terms_.begin(), ib = b.terms_.begin();
  GrlexGreater gt;
  for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return gt(ib->first, ia->first);
    if (ia->second != ib->second) return ia->second < ib->second;
  }
  return ia == a.terms_.end() && ib != b.terms_.end();
}

Poly Poly::pow(int e) const {
  if (e < 0) throw std::domain_error("Poly::pow: negative exponent");
  Poly acc(nvars_, GaussianRational(1));
  Poly base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

Poly Poly::derivative(int var) const {
  Poly r(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exps d = e;
    d[var] -= 1;
    r.add_term(d, c * GaussianRational(e[var]));
  }
  return r;
}

GaussianRational Poly::eval(const std::vector<GaussianRational>& point) const {
  assert(static_cast<int>(point.size()) == nvars_);
  GaussianRational acc(0);
  for (const auto& [e, c] : terms_) {
    GaussianRational t = c;
    for (int i = 0; i < nvars_; ++i)
      if (e[i] != 0) t *= point[i].pow(e[i]);
    acc += t;
  }
  return acc;
}

Poly Poly::compose(const std::vector<Poly>& values) const {
  assert(static_cast<int>(values.size()) == nvars_);
  int out_vars = values.empty() ? 0 : values[0].nvars();
  Poly acc(out_vars);
  for (const auto& [e, c] : terms_) {
    Poly t(out_vars, c);
    for (int i = 0; i < nvars_; ++i)
      if (e[i] != 0) t = t * values[i].pow(e[i]);
    acc = acc + t;
  }
  return acc;
}

std::string Poly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string cs = c.str();
    bool complex_sum = cs.find_first_of("+-", 1) != std::string::npos && cs[0] != '(';
    if (complex_sum && !(c.im() != 0 && c.re() == 0)) cs = "(" + cs + ")";
    std::string mono;
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    std::string piece;
    if (mono.empty()) {
      piece = cs;
    } else if (cs == "1") {
      piece = mono;
    } else if (cs == "-1") {
      piece = "-" + mono;
    } else {
      piece = cs + "*" + mono;
    }
    if (!first && piece[0] != '-') out << "+";
    out << piece;
    first = false;
  }
  return out.str();
}

namespace {

bool monomial_divides(const Exps& a, const Exps& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

/// View p as univariate in `var` and collect its coefficients (polynomials
/// with the exponent of `var` set to zero), indexed by degree.
std::vector<Poly> univariate_coeffs(const Poly& p, int var) {
  int d = std::max(p.degree_in(var), 0);
  std::vector<Poly> cs(d + 1, Poly(p.nvars()));
  for (const auto& [e, c] : p.terms()) {
    Exps r = e;
    int k = r[var];
    r[var] = 0;
    cs[k].add_term(r, c);
  }
  return cs;
}

/// Content of p with respect to `var`: gcd of its univariate coefficients.
Poly content_wrt(const Poly& p, int var) {
  auto cs = univariate_coeffs(p, var);
  Poly g(p.nvars());
  for (const auto& c : cs) g = poly_gcd(g, c);
  return g;
}

/// Pseudo-remainder of a by b with respect to `var` (deg_var(b) >= 1):
/// the remainder of lc(b)^(deg a - deg b + 1) * a divided by b.
Poly pseudo_rem(const Poly& a, const Poly& b, int var) {
  int nvars = a.nvars();
  auto bc = univariate_coeffs(b, var);
  int db = static_cast<int>(bc.size()) - 1;
  const Poly& lb = bc[db];
  Poly r = a;
  int da = a.degree_in(var);
  int steps = 0;
  int dr = da;
  while (!r.is_zero() && dr >= db) {
    auto rc = univariate_coeffs(r, var);
    Poly lead = rc[dr];
    // r <- lb*r - lead*x^(dr-db)*b
    Poly shift = Poly::variable(nvars, var, dr - db);
    r = lb * r - lead * shift * b;
    ++steps;
    int nd = r.degree_in(var);
    assert(r.is_zero() || nd < dr);
    dr = nd;
  }
  // Pad to the exact power lc(b)^(da-db+1) required by the subresultant
  // divisibility bookkeeping.
  for (int k = steps; k < da - db + 1; ++k) r = r * lb;
  return r;
}

int highest_var_present(const Poly& a, const Poly& b) {
  for (int v = a.nvars() - 1; v >= 0; --v)
    if (a.degree_in(v) > 0 || b.degree_in(v) > 0) return v;
  return -1;
}

bool univariate_in(const Poly& p, int var) {
  for (const auto& [e, c] : p.terms())
    for (size_t i = 0; i < e.size(); ++i)
      if (static_cast<int>(i) != var && e[i] != 0) return false;
  return true;
}

/// Dense univariate coefficient vector of p viewed in `var` after
/// substituting `point` for every other variable. Degree may drop if the
/// top coefficient vanishes at the point.
std::vector<GaussianRational> eval_except(const Poly& p, int var,
                                          const std::vector<GaussianRational>& point) {
  std::vector<GaussianRational> cs(std::max(p.degree_in(var), 0) + 1, GaussianRational(0));
  for (const auto& [e, c] : p.terms()) {
    GaussianRational t = c;
    for (size_t i = 0; i < e.size(); ++i)
      if (static_cast<int>(i) != var && e[i] != 0) t *= point[i].pow(e[i]);
    cs[e[var]] += t;
  }
  while (cs.size() > 1 && cs.back().is_zero()) cs.pop_back();
  return cs;
}

/// Degree of the gcd of two univariate polynomials given as dense
/// coefficient vectors (monic Euclid).
int univ_gcd_degree(std::vector<GaussianRational> a, std::vector<GaussianRational> b) {
  auto trim = [](std::vector<GaussianRational>& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
  };
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a mod b, with b made monic first
    GaussianRational lb = b.back();
    for (auto& c : b) c /= lb;
    while (a.size() >= b.size()) {
      GaussianRational q = a.back();
      size_t off = a.size() - b.size();
      for (size_t i = 0; i < b.size(); ++i) a[off + i] -= b[i] * q;
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return static_cast<int>(a.size()) - 1;
}

/// Monic univariate gcd over Q(i) for polynomials supported on one variable.
Poly univ_gcd_poly(const Poly& a, const Poly& b, int var) {
  std::vector<GaussianRational> none(a.nvars(), GaussianRational(0));
  std::vector<GaussianRational> pa = eval_except(a, var, none);
  std::vector<GaussianRational> pb = eval_except(b, var, none);
  auto trim = [](std::vector<GaussianRational>& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
  };
  trim(pa);
  trim(pb);
  while (!pb.empty()) {
    GaussianRational lb = pb.back();
    for (auto& c : pb) c /= lb;
    while (pa.size() >= pb.size()) {
      GaussianRational q = pa.back();
      size_t off = pa.size() - pb.size();
      for (size_t i = 0; i < pb.size(); ++i) pa[off + i] -= pb[i] * q;
      trim(pa);
      if (pa.empty()) break;
    }
    std::swap(pa, pb);
  }
  Poly g(a.nvars());
  GaussianRational lc = pa.back();
  for (size_t k = 0; k < pa.size(); ++k) {
    if (pa[k].is_zero()) continue;
    Exps e(a.nvars(), 0);
    e[var] = static_cast<int>(k);
    g.add_term(e, pa[k] / lc);
  }
  return g;
}

Poly monic(const Poly& p) {
  if (p.is_zero()) return p;
  return p * (GaussianRational(1) / p.leading_coeff());
}

}  // namespace

std::optional<Poly> poly_divide_exact(const Poly& a, const Poly& b) {
  if (b.is_zero()) return std::nullopt;
  Poly q(a.nvars());
  Poly r = a;
  const Exps& lb = b.leading_monomial();
  const GaussianRational& cb = b.leading_coeff();
  while (!r.is_zero()) {
    const Exps& lr = r.leading_monomial();
    if (!monomial_divides(lb, lr)) return std::nullopt;
    Exps e(lr.size());
    for (size_t i = 0; i < e.size(); ++i) e[i] = lr[i] - lb[i];
    GaussianRational c = r.leading_coeff() / cb;
    Poly t(a.nvars());
    t.add_term(e, c);
    q = q + t;
    r = r - t * b;
  }
  return q;
}

Poly poly_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  if (a.is_constant() || b.is_constant()) return Poly(a.nvars(), GaussianRational(1));

  // Cheap fast paths: one divides the other.
  if (auto q = poly_divide_exact(a, b)) {
    (void)q;
    return monic(b);
  }
  if (auto q = poly_divide_exact(b, a)) {
    (void)q;
    return monic(a);
  }

  int var = highest_var_present(a, b);
  assert(var >= 0);

  if (univariate_in(a, var) && univariate_in(b, var)) return univ_gcd_poly(a, b, var);

  // Shortcut for the common coprime-in-var case: substitute fixed rational
  // points for every other variable. If neither leading coefficient in `var`
  // vanishes at the point, deg_var(gcd) is bounded by the univariate gcd
  // degree; when that is 0 the gcd involves only the remaining variables and
  // equals the gcd of the contents.
  {
    static const long kPoints[2][8] = {{2, 3, 5, 7, 11, 13, 17, 19},
                                       {-3, 4, -5, 9, 8, -7, 23, 6}};
    auto ac = univariate_coeffs(a, var);
    auto bc = univariate_coeffs(b, var);
    for (int trial = 0; trial < 2; ++trial) {
      std::vector<GaussianRational> pt;
      for (int v = 0; v < a.nvars(); ++v)
        pt.emplace_back(GaussianRational(kPoints[trial][v % 8] + (v / 8)));
      if (ac.back().eval(pt).is_zero() || bc.back().eval(pt).is_zero()) continue;
      if (univ_gcd_degree(eval_except(a, var, pt), eval_except(b, var, pt)) == 0) {
        Poly ca = content_wrt(a, var), cb = content_wrt(b, var);
        return poly_gcd(ca, cb);
      }
      break;
    }
  }

  // Subresultant PRS in the main variable: each pseudo-remainder is divided
  // by the predicted factor g*h^d, so intermediate growth stays polynomial
  // and contents are only extracted at entry and exit.
  Poly ca = content_wrt(a, var), cb = content_wrt(b, var);
  Poly cg = poly_gcd(ca, cb);
  Poly pa = *poly_divide_exact(a, ca);
  Poly pb = *poly_divide_exact(b, cb);
  if (pa.degree_in(var) < pb.degree_in(var)) std::swap(pa, pb);
  if (pb.degree_in(var) == 0) return monic(cg);
  Poly g(a.nvars(), GaussianRational(1));
  Poly h = g;
  while (true) {
    int d = pa.degree_in(var) - pb.degree_in(var);
    Poly r = pseudo_rem(pa, pb, var);
    if (r.is_zero()) break;
    if (r.degree_in(var) == 0) return monic(cg);  // unit in the main variable
    pa = pb;
    pb = *poly_divide_exact(r, g * h.pow(d));
    g = univariate_coeffs(pa, var).back();
    if (d == 1)
      h = g;
    else if (d > 1)
      h = *poly_divide_exact(g.pow(d), h.pow(d - 1));
  }
  Poly cpb = content_wrt(pb, var);
  return monic(cg * *poly_divide_exact(pb, cpb));
}

}  // namespace gg
