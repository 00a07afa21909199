#pragma once

// Dense exact linear algebra over F_p: reduced row echelon form with
// deterministic pivoting, nullspaces, rank, inverse. Dimensions stay at
// desk scale, so plain Gaussian elimination is the whole story.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "glk/arith.hpp"

namespace glk {

class FpMatrix {
 public:
  FpMatrix(std::size_t rows, std::size_t cols, const PrimeField& F)
      : rows_(rows), cols_(cols), F_(&F), a_(rows * cols, 0) {}

  static FpMatrix identity(std::size_t n, const PrimeField& F) {
    FpMatrix m(n, n, F);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1 % F.p();
    return m;
  }

  static FpMatrix from_rows(const std::vector<std::vector<Scalar>>& rows, std::size_t cols, const PrimeField& F) {
    FpMatrix m(rows.size(), cols, F);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const PrimeField& field() const { return *F_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  Scalar operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Scalar* row(std::size_t i) { return a_.data() + i * cols_; }
  const Scalar* row(std::size_t i) const { return a_.data() + i * cols_; }

  std::vector<Scalar> row_vec(std::size_t i) const {
    return std::vector<Scalar>(row(i), row(i) + cols_);
  }

  void append_row(const std::vector<Scalar>& r) {
    if (r.size() != cols_) throw std::invalid_argument("append_row: size mismatch");
    a_.insert(a_.end(), r.begin(), r.end());
    ++rows_;
  }

  FpMatrix mul(const FpMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("mul: shape mismatch");
    FpMatrix out(rows_, o.cols_, *F_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        Scalar v = (*this)(i, k);
        if (!v) continue;
        const Scalar* orow = o.row(k);
        Scalar* trow = out.row(i);
        for (std::size_t j = 0; j < o.cols_; ++j)
          trow[j] = F_->add(trow[j], F_->mul(v, orow[j]));
      }
    return out;
  }

  std::vector<Scalar> apply(const std::vector<Scalar>& x) const {
    std::vector<Scalar> y(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
      Scalar acc = 0;
      const Scalar* r = row(i);
      for (std::size_t j = 0; j < cols_; ++j)
        if (r[j] && x[j]) acc = F_->add(acc, F_->mul(r[j], x[j]));
      y[i] = acc;
    }
    return y;
  }

  // In-place reduced row echelon form; returns pivot column indices.
  // Pivot choice: first row with a nonzero entry in the leftmost open
  // column, so the result is canonical for a given row span.
  std::vector<std::size_t> rref() {
    std::vector<std::size_t> pivots;
    std::size_t rr = 0;
    for (std::size_t c = 0; c < cols_ && rr < rows_; ++c) {
      std::size_t sel = rr;
      while (sel < rows_ && (*this)(sel, c) == 0) ++sel;
      if (sel == rows_) continue;
      if (sel != rr)
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(rr, j), (*this)(sel, j));
      Scalar inv = F_->inv((*this)(rr, c));
      for (std::size_t j = c; j < cols_; ++j) (*this)(rr, j) = F_->mul((*this)(rr, j), inv);
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == rr) continue;
        Scalar f = (*this)(i, c);
        if (!f) continue;
        for (std::size_t j = c; j < cols_; ++j)
          (*this)(i, j) = F_->sub((*this)(i, j), F_->mul(f, (*this)(rr, j)));
      }
      pivots.push_back(c);
      ++rr;
    }
    return pivots;
  }

  std::size_t rank() const {
    FpMatrix t = *this;
    return t.rref().size();
  }

  // Basis of {x : Ax = 0}, canonical form (one vector per free column).
  std::vector<std::vector<Scalar>> nullspace() const {
    FpMatrix t = *this;
    auto piv = t.rref();
    std::vector<bool> is_piv(cols_, false);
    for (auto c : piv) is_piv[c] = true;
    std::vector<std::vector<Scalar>> basis;
    for (std::size_t f = 0; f < cols_; ++f) {
      if (is_piv[f]) continue;
      std::vector<Scalar> x(cols_, 0);
      x[f] = 1 % F_->p();
      for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = F_->neg(t(r, f));
      basis.push_back(std::move(x));
    }
    return basis;
  }

  // Inverse of a square matrix; throws if singular.
  FpMatrix inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse: not square");
    FpMatrix aug(rows_, 2 * cols_, *F_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
      aug(i, cols_ + i) = 1 % F_->p();
    }
    auto piv = aug.rref();
    if (piv.size() != rows_ || piv.back() >= cols_)
      throw std::runtime_error("inverse: singular matrix");
    FpMatrix out(rows_, cols_, *F_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = aug(i, cols_ + j);
    return out;
  }

  bool operator==(const FpMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

 private:
  std::size_t rows_, cols_;
  const PrimeField* F_;
  std::vector<Scalar> a_;
};

// Row span comparison via canonical echelon forms.
inline bool same_row_span(const FpMatrix& a, const FpMatrix& b) {
  FpMatrix ta = a, tb = b;
  auto pa = ta.rref();
  auto pb = tb.rref();
  if (pa.size() != pb.size()) return false;
  for (std::size_t i = 0; i < pa.size(); ++i) {
    if (pa[i] != pb[i]) return false;
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (ta(i, j) != tb(i, j)) return false;
  }
  return true;
}

// Echelonized list of vectors (dropping dependent ones).
inline std::vector<std::vector<Scalar>> echelon_basis(const std::vector<std::vector<Scalar>>& vecs,
                                                      std::size_t cols, const PrimeField& F) {
  FpMatrix m = FpMatrix::from_rows(vecs, cols, F);
  auto piv = m.rref();
  std::vector<std::vector<Scalar>> out;
  for (std::size_t i = 0; i < piv.size(); ++i) out.push_back(m.row_vec(i));
  return out;
}

}  // namespace glk
