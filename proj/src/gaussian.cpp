#include "flagslice/gaussian.hpp"

#include <stdexcept>

#include "flagslice/error.hpp"

namespace flagslice {

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  im_ = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  const mpq_class n = o.norm();
  mpq_class re = (re_ * o.re_ + im_ * o.im_) / n;
  im_ = (im_ * o.re_ - re_ * o.im_) / n;
  re_ = std::move(re);
  return *this;
}

std::string GaussianRational::to_string() const {
  if (sgn(im_) == 0) return re_.get_str();
  std::string out = sgn(re_) == 0 ? "" : re_.get_str();
  if (sgn(im_) > 0 && !out.empty()) out += "+";
  out += im_.get_str() + "i";
  return out;
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& columns, int rows) {
  Matrix m(rows, static_cast<int>(columns.size()));
  for (int c = 0; c < m.cols(); ++c) {
    if (static_cast<int>(columns[c].size()) != rows)
      throw InvalidArgument("column length does not match row count");
    for (int r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Vector Matrix::column(int c) const {
  Vector v(rows_);
  for (int r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::conj() const {
  Matrix out = *this;
  for (auto& x : out.data_) x = x.conj();
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

Matrix Matrix::block(int r0, int c0, int nrows, int ncols) const {
  Matrix out(nrows, ncols);
  for (int r = 0; r < nrows; ++r)
    for (int c = 0; c < ncols; ++c) out(r, c) = (*this)(r0 + r, c0 + c);
  return out;
}

Matrix Matrix::hstack(const Matrix& right) const {
  if (rows_ != right.rows_) throw InvalidArgument("hstack row mismatch");
  Matrix out(rows_, cols_ + right.cols_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c);
    for (int c = 0; c < right.cols_; ++c) out(r, cols_ + c) = right(r, c);
  }
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw InvalidArgument("matrix product shape mismatch");
  Matrix out(a.rows_, b.cols_);
  for (int r = 0; r < a.rows_; ++r)
    for (int k = 0; k < a.cols_; ++k) {
      const auto& x = a(r, k);
      if (x.is_zero()) continue;
      for (int c = 0; c < b.cols_; ++c)
        if (!b(k, c).is_zero()) out(r, c) += x * b(k, c);
    }
  return out;
}

namespace {

struct GaussInt {
  mpz_class re, im;
  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
};

// (a*b - c*d) / e, exact in Z[i].
GaussInt bareiss_step(const GaussInt& a, const GaussInt& b, const GaussInt& c, const GaussInt& d,
                      const GaussInt& e) {
  mpz_class re = a.re * b.re - a.im * b.im - (c.re * d.re - c.im * d.im);
  mpz_class im = a.re * b.im + a.im * b.re - (c.re * d.im + c.im * d.re);
  if (e.im == 0 && e.re == 1) return {re, im};
  // multiply by conj(e), divide by |e|^2
  const mpz_class n = e.re * e.re + e.im * e.im;
  mpz_class nre = re * e.re + im * e.im;
  mpz_class nim = im * e.re - re * e.im;
  GaussInt out;
  mpz_divexact(out.re.get_mpz_t(), nre.get_mpz_t(), n.get_mpz_t());
  mpz_divexact(out.im.get_mpz_t(), nim.get_mpz_t(), n.get_mpz_t());
  return out;
}

// Rows scaled by the lcm of their denominators. `scale` collects the factors.
std::vector<std::vector<GaussInt>> clear_denominators(const Matrix& m, mpz_class* scale) {
  std::vector<std::vector<GaussInt>> out(m.rows(), std::vector<GaussInt>(m.cols()));
  if (scale) *scale = 1;
  for (int r = 0; r < m.rows(); ++r) {
    mpz_class l = 1;
    for (int c = 0; c < m.cols(); ++c) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).re().get_den_mpz_t());
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).im().get_den_mpz_t());
    }
    for (int c = 0; c < m.cols(); ++c) {
      out[r][c].re = m(r, c).re().get_num() * (l / m(r, c).re().get_den());
      out[r][c].im = m(r, c).im().get_num() * (l / m(r, c).im().get_den());
    }
    if (scale) *scale *= l;
  }
  return out;
}

// Returns the rank; `last_pivot` receives the final pivot and `swaps` the
// parity of row exchanges (used for the determinant of square input).
int bareiss(std::vector<std::vector<GaussInt>>& a, int cols, GaussInt* last_pivot, int* swaps) {
  const int rows = static_cast<int>(a.size());
  GaussInt prev{1, 0};
  int r = 0;
  int parity = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i)
      if (!a[i][c].is_zero()) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != r) {
      std::swap(a[pivot], a[r]);
      parity ^= 1;
    }
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j)
        a[i][j] = bareiss_step(a[r][c], a[i][j], a[i][c], a[r][j], prev);
      a[i][c] = {};
    }
    prev = a[r][c];
    ++r;
  }
  if (last_pivot) *last_pivot = prev;
  if (swaps) *swaps = parity;
  return r;
}

}  // namespace

int rank(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  // Eliminate along the shorter dimension.
  if (m.cols() > m.rows()) return rank(m.transpose());
  auto a = clear_denominators(m, nullptr);
  return bareiss(a, m.cols(), nullptr, nullptr);
}

GaussianRational determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw InvalidArgument("determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  mpz_class scale;
  auto a = clear_denominators(m, &scale);
  GaussInt pivot;
  int swaps = 0;
  if (bareiss(a, m.cols(), &pivot, &swaps) < m.rows()) return 0;
  GaussianRational det(mpq_class(pivot.re), mpq_class(pivot.im));
  if (swaps) det = -det;
  return det / GaussianRational(mpq_class(scale), 0);
}

Matrix inverse(const Matrix& m) {
  const int n = m.rows();
  if (n != m.cols()) throw InvalidArgument("inverse of a non-square matrix");
  Matrix a = m.hstack(Matrix::identity(n));
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int r = c; r < n; ++r)
      if (!a(r, c).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw InvalidArgument("matrix is singular");
    if (pivot != c)
      for (int j = 0; j < 2 * n; ++j) std::swap(a(pivot, j), a(c, j));
    const GaussianRational inv = GaussianRational(1) / a(c, c);
    for (int j = 0; j < 2 * n; ++j) a(c, j) *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == c || a(r, c).is_zero()) continue;
      const GaussianRational f = a(r, c);
      for (int j = 0; j < 2 * n; ++j) a(r, j) -= f * a(c, j);
    }
  }
  return a.block(0, n, n, n);
}

Matrix column_echelon(const Matrix& m) {
  // Row echelon of the transpose, read back as columns.
  Matrix a = m.transpose();
  int r = 0;
  for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
    int pivot = -1;
    for (int i = r; i < a.rows(); ++i)
      if (!a(i, c).is_zero()) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    for (int j = 0; j < a.cols(); ++j) std::swap(a(pivot, j), a(r, j));
    const GaussianRational inv = GaussianRational(1) / a(r, c);
    for (int j = 0; j < a.cols(); ++j) a(r, j) *= inv;
    for (int i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const GaussianRational f = a(i, c);
      for (int j = 0; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return a.block(0, 0, r, a.cols()).transpose();
}

}  // namespace flagslice
