#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

namespace gg {

/// Dense matrix over an exact field F (GaussianRational or Coeff). F must
/// provide zero_like()/one_like() prototypes, is_zero(), and exact
/// arithmetic including division.
template <class F>
class Matrix {
 public:
  Matrix(int rows, int cols, const F& proto)
      : rows_(rows), cols_(cols), proto_(proto.zero_like()), data_(rows * cols, proto_) {}

  static Matrix identity(int n, const F& proto) {
    Matrix m(n, n, proto);
    for (int i = 0; i < n; ++i) m.at(i, i) = proto.one_like();
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const F& proto() const { return proto_; }
  F& at(int i, int j) { return data_[i * cols_ + j]; }
  const F& at(int i, int j) const { return data_[i * cols_ + j]; }

  bool is_zero() const {
    for (const F& v : data_)
      if (!v.is_zero()) return false;
    return true;
  }

  std::vector<F> row(int i) const {
    return std::vector<F>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }
  std::vector<F> col(int j) const {
    std::vector<F> c;
    c.reserve(rows_);
    for (int i = 0; i < rows_; ++i) c.push_back(at(i, j));
    return c;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_, proto_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  Matrix operator-() const {
    Matrix r = *this;
    for (F& v : r.data_) v = -v;
    return r;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b);
    Matrix r = a;
    for (size_t k = 0; k < r.data_.size(); ++k) r.data_[k] += b.data_[k];
    return r;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b);
    Matrix r = a;
    for (size_t k = 0; k < r.data_.size(); ++k) r.data_[k] -= b.data_[k];
    return r;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: shape mismatch in product");
    Matrix r(a.rows_, b.cols_, a.proto_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const F& aik = a.at(i, k);
        if (aik.is_zero()) continue;
        for (int j = 0; j < b.cols_; ++j) {
          const F& bkj = b.at(k, j);
          if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
        }
      }
    return r;
  }
  Matrix operator*(const F& c) const {
    Matrix r = *this;
    for (F& v : r.data_) v *= c;
    return r;
  }

  std::vector<F> apply(const std::vector<F>& v) const {
    if (static_cast<int>(v.size()) != cols_)
      throw std::invalid_argument("Matrix: vector length mismatch");
    std::vector<F> r(rows_, proto_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
    return r;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  /// In-place reduced row echelon form. Pivots: leftmost nonzero column,
  /// first candidate row, so the result is canonical. Returns pivot columns.
  std::vector<int> rref() {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
      int p = -1;
      for (int i = r; i < rows_; ++i)
        if (!at(i, c).is_zero()) {
          p = i;
          break;
        }
      if (p < 0) continue;
      if (p != r)
        for (int j = 0; j < cols_; ++j) std::swap(at(p, j), at(r, j));
      F inv = at(r, c).one_like() / at(r, c);
      for (int j = c; j < cols_; ++j) at(r, j) *= inv;
      for (int i = 0; i < rows_; ++i) {
        if (i == r || at(i, c).is_zero()) continue;
        F f = at(i, c);
        for (int j = c; j < cols_; ++j) at(i, j) -= f * at(r, j);
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  int rank() const {
    Matrix m = *this;
    return static_cast<int>(m.rref().size());
  }

  /// Basis of the right kernel; one vector per free column, the free
  /// variable set to 1 (deterministic order).
  std::vector<std::vector<F>> kernel() const {
    Matrix m = *this;
    std::vector<int> pivots = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<F>> basis;
    for (int c = 0; c < cols_; ++c) {
      if (is_pivot[c]) continue;
      std::vector<F> v(cols_, proto_);
      v[c] = proto_.one_like();
      for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(static_cast<int>(r), c);
      basis.push_back(std::move(v));
    }
    return basis;
  }

  /// One solution of Ax = b (free variables set to zero), or nullopt.
  std::optional<std::vector<F>> solve(const std::vector<F>& b) const {
    if (static_cast<int>(b.size()) != rows_)
      throw std::invalid_argument("Matrix: rhs length mismatch");
    Matrix aug(rows_, cols_ + 1, proto_);
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
      aug.at(i, cols_) = b[i];
    }
    std::vector<int> pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;  // inconsistent
    std::vector<F> x(cols_, proto_);
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(static_cast<int>(r), cols_);
    return x;
  }

  std::optional<Matrix> inverse() const {
    if (rows_ != cols_) return std::nullopt;
    Matrix aug(rows_, 2 * cols_, proto_);
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
      aug.at(i, cols_ + i) = proto_.one_like();
    }
    std::vector<int> pivots = aug.rref();
    if (static_cast<int>(pivots.size()) != rows_ || pivots.back() != rows_ - 1)
      return std::nullopt;
    Matrix inv(rows_, cols_, proto_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
    return inv;
  }

 private:
  void require_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("Matrix: shape mismatch");
  }

  int rows_, cols_;
  F proto_;
  std::vector<F> data_;
};

}  // namespace gg
