#pragma once

#include <vector>

#include "gg/matrix.hpp"

namespace gg {

/// Subspace of F^n held as a canonical (reduced-echelon) row basis, so
/// equality of subspaces is structural equality of bases.
template <class F>
class Subspace {
 public:
  Subspace(int ambient, const F& proto)
      : ambient_(ambient), proto_(proto.zero_like()), basis_(0, ambient, proto_) {}

  static Subspace span(int ambient, const std::vector<std::vector<F>>& gens, const F& proto) {
    Matrix<F> m(static_cast<int>(gens.size()), ambient, proto);
    for (size_t i = 0; i < gens.size(); ++i) {
      if (static_cast<int>(gens[i].size()) != ambient)
        throw std::invalid_argument("Subspace: generator length mismatch");
      for (int j = 0; j < ambient; ++j) m.at(static_cast<int>(i), j) = gens[i][j];
    }
    int r = static_cast<int>(m.rref().size());
    Subspace s(ambient, proto);
    s.basis_ = Matrix<F>(r, ambient, proto);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < ambient; ++j) s.basis_.at(i, j) = m.at(i, j);
    return s;
  }

  static Subspace full(int ambient, const F& proto) {
    Subspace s(ambient, proto);
    s.basis_ = Matrix<F>::identity(ambient, proto);
    return s;
  }

  int ambient() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  const Matrix<F>& basis() const { return basis_; }
  std::vector<std::vector<F>> basis_vectors() const {
    std::vector<std::vector<F>> v;
    for (int i = 0; i < dim(); ++i) v.push_back(basis_.row(i));
    return v;
  }

  bool contains(const std::vector<F>& v) const {
    std::vector<std::vector<F>> gens = basis_vectors();
    gens.push_back(v);
    return Subspace::span(ambient_, gens, proto_).dim() == dim();
  }
  bool contains(const Subspace& other) const {
    std::vector<std::vector<F>> gens = basis_vectors();
    for (const auto& v : other.basis_vectors()) gens.push_back(v);
    return Subspace::span(ambient_, gens, proto_).dim() == dim();
  }

  friend Subspace sum(const Subspace& a, const Subspace& b) {
    std::vector<std::vector<F>> gens = a.basis_vectors();
    for (const auto& v : b.basis_vectors()) gens.push_back(v);
    return Subspace::span(a.ambient_, gens, a.proto_);
  }

  friend Subspace intersect(const Subspace& a, const Subspace& b) {
    // Zassenhaus-free approach: solve [A^T | -B^T] x = 0 and read the A part.
    int da = a.dim(), db = b.dim();
    Matrix<F> m(a.ambient_, da + db, a.proto_);
    for (int j = 0; j < da; ++j)
      for (int i = 0; i < a.ambient_; ++i) m.at(i, j) = a.basis_.at(j, i);
    for (int j = 0; j < db; ++j)
      for (int i = 0; i < a.ambient_; ++i) m.at(i, da + j) = -b.basis_.at(j, i);
    std::vector<std::vector<F>> gens;
    for (const auto& k : m.kernel()) {
      std::vector<F> v(a.ambient_, a.proto_);
      for (int j = 0; j < da; ++j)
        for (int i = 0; i < a.ambient_; ++i) v[i] += k[j] * a.basis_.at(j, i);
      gens.push_back(std::move(v));
    }
    return Subspace::span(a.ambient_, gens, a.proto_);
  }

  /// {v : pairing(v, s) = 0 for all s in this subspace}.
  Subspace annihilator_in(const Matrix<F>& pairing) const {
    Matrix<F> m = basis_ * pairing;  // rows: pairing(s_i, .)
    return Subspace::span(ambient_, m.kernel(), proto_);
  }

  /// Coordinates of v in the row basis, if v lies in the subspace.
  std::optional<std::vector<F>> coordinates(const std::vector<F>& v) const {
    return basis_.transpose().solve(v);
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  int ambient_;
  F proto_;
  Matrix<F> basis_;
};

/// Image of a subspace under a linear map (rows of the result re-canonicalized).
template <class F>
Subspace<F> map_subspace(const Matrix<F>& m, const Subspace<F>& s) {
  std::vector<std::vector<F>> gens;
  for (const auto& v : s.basis_vectors()) gens.push_back(m.apply(v));
  return Subspace<F>::span(m.rows(), gens, m.proto());
}

/// Quotient top/bottom: representatives are the top basis vectors that
/// extend a basis of bottom (deterministic order).
template <class F>
struct Quotient {
  std::vector<std::vector<F>> reps;
  int dim() const { return static_cast<int>(reps.size()); }
};

template <class F>
Quotient<F> quotient(const Subspace<F>& top, const Subspace<F>& bottom) {
  if (!top.contains(bottom)) throw std::invalid_argument("quotient: bottom not inside top");
  Quotient<F> q;
  Subspace<F> acc = bottom;
  for (const auto& v : top.basis_vectors()) {
    if (acc.contains(v)) continue;
    std::vector<std::vector<F>> gens = acc.basis_vectors();
    gens.push_back(v);
    acc = Subspace<F>::span(top.ambient(), gens, top.basis().proto());
    q.reps.push_back(v);
  }
  return q;
}

/// Quotient carrying the induced pairing. The pairing descends iff bottom
/// pairs to zero with all of top; that is a precondition here.
template <class F>
struct PairedQuotient {
  Quotient<F> quot;
  Matrix<F> induced_pairing;
  bool nondegenerate;
};

template <class F>
PairedQuotient<F> quotient_with_pairing(const Subspace<F>& top, const Subspace<F>& bottom,
                                        const Matrix<F>& pairing) {
  for (const auto& b : bottom.basis_vectors()) {
    std::vector<F> pb = pairing.apply(b);
    for (const auto& t : top.basis_vectors()) {
      F acc = pairing.proto();
      for (size_t i = 0; i < pb.size(); ++i) acc += t[i] * pb[i];
      if (!acc.is_zero())
        throw std::invalid_argument("quotient_with_pairing: pairing does not descend");
    }
  }
  Quotient<F> q = quotient(top, bottom);
  int d = q.dim();
  Matrix<F> g(d, d, pairing.proto());
  for (int i = 0; i < d; ++i) {
    std::vector<F> pi = pairing.apply(q.reps[i]);
    for (int j = 0; j < d; ++j) {
      F acc = pairing.proto();
      for (size_t k = 0; k < pi.size(); ++k) acc += q.reps[j][k] * pi[k];
      g.at(j, i) = acc;  // g(j,i) = <reps_j, P reps_i>
    }
  }
  bool nd = g.rank() == d;
  return PairedQuotient<F>{std::move(q), std::move(g), nd};
}

}  // namespace gg
