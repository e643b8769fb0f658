#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace flagslice {

// re + im*i with exact rationals; mpq_class keeps lowest terms.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }
  static GaussianRational i() { return {0, 1}; }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }
  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  GaussianRational conj() const { return {re_, -im_}; }
  mpq_class norm() const { return re_ * re_ + im_ * im_; }

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);
  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  GaussianRational operator-() const { return {-re_, -im_}; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  std::string to_string() const;

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

using Vector = std::vector<GaussianRational>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols) {}
  static Matrix identity(int n);
  static Matrix from_columns(const std::vector<Vector>& columns, int rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  GaussianRational& operator()(int r, int c) { return data_[std::size_t(r) * cols_ + c]; }
  const GaussianRational& operator()(int r, int c) const { return data_[std::size_t(r) * cols_ + c]; }

  Vector column(int c) const;
  Matrix conj() const;
  Matrix transpose() const;
  Matrix block(int r0, int c0, int nrows, int ncols) const;
  Matrix left_columns(int ncols) const { return block(0, 0, rows_, ncols); }
  Matrix hstack(const Matrix& right) const;
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<GaussianRational> data_;
};

// Fraction-free elimination over the Gaussian integers.
int rank(const Matrix& m);
GaussianRational determinant(const Matrix& m);
// Throws InvalidArgument when singular.
Matrix inverse(const Matrix& m);
// Reduced column-echelon form of the column span (pivots chosen top-down).
Matrix column_echelon(const Matrix& m);

}  // namespace flagslice
