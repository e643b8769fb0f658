#include "flagslice/geometry.hpp"

#include <random>

namespace flagslice {

FormSpec FormSpec::symmetric(int n) {
  if (n < 1) throw InvalidArgument("form dimension must be positive");
  FormSpec f;
  f.kind_ = Kind::symmetric_b;
  f.n_ = n;
  return f;
}

FormSpec FormSpec::symplectic(int m) {
  if (m < 1) throw InvalidArgument("symplectic form needs m >= 1");
  FormSpec f;
  f.kind_ = Kind::symplectic_omega;
  f.n_ = 2 * m;
  return f;
}

FormSpec FormSpec::hermitian(int p, int q) {
  if (p < 0 || q < 0 || p + q < 1) throw InvalidArgument("hermitian form needs p, q >= 0, p+q >= 1");
  FormSpec f;
  f.kind_ = Kind::hermitian_h;
  f.n_ = p + q;
  f.p_ = p;
  f.q_ = q;
  return f;
}

GaussianRational FormSpec::operator()(const Vector& v, const Vector& w) const {
  if (static_cast<int>(v.size()) != n_ || static_cast<int>(w.size()) != n_)
    throw InvalidArgument("vector length does not match the form");
  GaussianRational out;
  switch (kind_) {
    case Kind::symmetric_b:
      for (int i = 0; i < n_; ++i) out += v[i] * w[i];
      break;
    case Kind::symplectic_omega: {
      const int m = n_ / 2;
      for (int i = 0; i < m; ++i) out += v[i] * w[m + i] - v[m + i] * w[i];
      break;
    }
    case Kind::hermitian_h:
      for (int i = 0; i < n_; ++i) {
        auto t = v[i] * w[i].conj();
        if (i < q_) out -= t; else out += t;
      }
      break;
  }
  return out;
}

Matrix FormSpec::gram(const Matrix& rows_side, const Matrix& cols_side) const {
  Matrix g(rows_side.cols(), cols_side.cols());
  std::vector<Vector> left, right;
  for (int i = 0; i < rows_side.cols(); ++i) left.push_back(rows_side.column(i));
  for (int j = 0; j < cols_side.cols(); ++j) right.push_back(cols_side.column(j));
  for (int i = 0; i < g.rows(); ++i)
    for (int j = 0; j < g.cols(); ++j) g(i, j) = (*this)(left[i], right[j]);
  return g;
}

Matrix apply_conjugation(const Matrix& m, Conjugation conj) {
  if (conj == Conjugation::real) return m.conj();
  if (m.rows() % 2) throw InvalidArgument("quaternionic structure needs even dimension");
  const int half = m.rows() / 2;
  Matrix out(m.rows(), m.cols());
  for (int c = 0; c < m.cols(); ++c)
    for (int k = 0; k < half; ++k) {
      out(k, c) = m(half + k, c).conj();
      out(half + k, c) = -m(k, c).conj();
    }
  return out;
}

bool is_tau_generic(const FlagMatrix& flag, Conjugation conj) {
  const int n = flag.n();
  const auto& dims = flag.dims();
  const Matrix& v = flag.matrix();
  const Matrix image = apply_conjugation(v, conj);
  const int s = static_cast<int>(dims.size());
  // Intersections only grow with i and j, so checking the two pairs that
  // straddle delta_i + delta_j = n settles every pair.
  for (int i = 0; i < s; ++i) {
    int below = -1, above = -1;
    for (int j = 0; j < s; ++j) {
      if (dims[i] + dims[j] <= n) below = j;
      if (dims[i] + dims[j] >= n && above < 0) above = j;
    }
    for (int j : {below, above}) {
      if (j < 0) continue;
      const int expected = std::min(n, dims[i] + dims[j]);
      if (rank(v.left_columns(dims[i]).hstack(image.left_columns(dims[j]))) != expected)
        return false;
    }
  }
  return true;
}

bool is_isotropic_flag(const FlagMatrix& flag, const FormSpec& form) {
  const int n = flag.n();
  if (form.n() != n) throw InvalidArgument("form and flag dimensions differ");
  const Matrix g = form.gram(flag.matrix(), flag.matrix());
  for (int di : flag.dims())
    for (int dj : flag.dims()) {
      // dim(V_i cap V_j^perp) = delta_i - rank(gram(V_j, V_i))
      if (rank(g.block(0, 0, dj, di)) != std::max(0, di + dj - n)) return false;
    }
  return true;
}

Signature signature(const Matrix& basis, int p, int q) {
  if (basis.rows() != p + q) throw InvalidArgument("basis dimension does not match p+q");
  Matrix a = FormSpec::hermitian(p, q).gram(basis, basis);
  Signature out;
  int k = a.rows();
  std::vector<int> live(k);
  for (int i = 0; i < k; ++i) live[i] = i;
  while (!live.empty()) {
    int pivot = -1;
    for (int i : live)
      if (!a(i, i).is_zero()) {
        pivot = i;
        break;
      }
    if (pivot < 0) {
      // Zero diagonal: replace v_i by v_i + c v_j with c = a(i, j) to make
      // the diagonal entry 2|a(i, j)|^2 positive.
      int pi = -1, pj = -1;
      for (int i : live) {
        for (int j : live)
          if (i != j && !a(i, j).is_zero()) {
            pi = i;
            pj = j;
            break;
          }
        if (pi >= 0) break;
      }
      if (pi < 0) {
        out.null += static_cast<int>(live.size());
        break;
      }
      const GaussianRational c = a(pi, pj);
      for (int j = 0; j < k; ++j) a(pi, j) += c * a(pj, j);
      for (int r = 0; r < k; ++r) a(r, pi) += c.conj() * a(r, pj);
      pivot = pi;
    }
    const GaussianRational d = a(pivot, pivot);
    if (sgn(d.re()) < 0) ++out.neg; else ++out.pos;
    std::erase(live, pivot);
    // Schur complement: a - a[:,pivot] a[pivot,:] / d
    for (int r : live) {
      if (a(r, pivot).is_zero()) continue;
      const GaussianRational f = a(r, pivot) / d;
      for (int c : live) a(r, c) -= f * a(pivot, c);
    }
  }
  return out;
}

std::optional<OrbitDescriptor> open_orbit_label(const FlagMatrix& flag, int p, int q) {
  if (flag.n() != p + q || flag.dims().back() != flag.n())
    throw InvalidArgument("orbit label needs a flag in C^(p+q) ending in the whole space");
  std::vector<int> neg, pos;
  for (std::size_t i = 0; i < flag.dims().size(); ++i) {
    const Signature sig = signature(flag.subspace(static_cast<int>(i)), p, q);
    if (sig.null) return std::nullopt;
    neg.push_back(sig.neg);
    pos.push_back(sig.pos);
  }
  return OrbitDescriptor::from_cumulative(neg, pos);
}

bool in_open_orbit_su(const FlagMatrix& flag, const OrbitDescriptor& desc) {
  if (flag.dims() != desc.dims().prefix_sums()) return false;
  auto label = open_orbit_label(flag, desc.p, desc.q);
  return label && *label == desc;
}

bool in_base_cycle_su(const FlagMatrix& flag, const OrbitDescriptor& desc) {
  const int n = desc.p + desc.q;
  if (flag.n() != n || flag.dims() != desc.dims().prefix_sums()) return false;
  int want_neg = 0, want_pos = 0;
  for (std::size_t i = 0; i < flag.dims().size(); ++i) {
    want_neg += desc.a[i];
    want_pos += desc.b[i];
    const Matrix v = flag.subspace(static_cast<int>(i));
    const int dim = v.cols();
    // V cap E^- consists of the vectors of V vanishing on the last p coordinates.
    const int with_neg = dim - rank(v.block(desc.q, 0, desc.p, dim));
    const int with_pos = dim - rank(v.block(0, 0, desc.q, dim));
    if (with_neg != want_neg || with_pos != want_pos) return false;
  }
  return true;
}

bool is_maximally_isotropic(const FlagMatrix& flag, int p, int q) {
  const int n = p + q;
  if (flag.n() != n || static_cast<int>(flag.dims().size()) != n)
    throw InvalidArgument("maximal isotropy is defined for complete flags in C^(p+q)");
  const Matrix g = FormSpec::hermitian(p, q).gram(flag.matrix(), flag.matrix());
  auto zero_block = [&](int rows, int cols) {
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c)
        if (!g(r, c).is_zero()) return false;
    return true;
  };
  if (!zero_block(q, q)) return false;
  // V_{p+i} has the dimension of V_{q-i}^perp, so containment is equality.
  for (int i = 1; i < q; ++i)
    if (!zero_block(q - i, p + i)) return false;
  return true;
}

int orientation_class(const FlagMatrix& flag) {
  const int n = flag.n();
  if (n % 2) throw InvalidArgument("orientation is defined for even dimension only");
  const int m = n / 2;
  const auto& dims = flag.dims();
  if (std::find(dims.begin(), dims.end(), m) == dims.end())
    throw InvalidArgument("flag has no middle-dimensional subspace");
  Matrix real(n, n);
  for (int k = 0; k < m; ++k)
    for (int r = 0; r < n; ++r) {
      real(r, 2 * k) = GaussianRational(flag.matrix()(r, k).re(), 0);
      real(r, 2 * k + 1) = GaussianRational(flag.matrix()(r, k).im(), 0);
    }
  return sgn(determinant(real).re());
}

Matrix standard_basis(int n) { return Matrix::identity(n); }

Matrix quaternion_iwasawa_basis(int m) {
  if (m < 1) throw InvalidArgument("quaternionic basis needs m >= 1");
  Matrix b(2 * m, 2 * m);
  for (int s = 0; s < m; ++s) {
    b(s, 2 * s) = 1;
    b(m + s, 2 * s + 1) = -1;
  }
  return b;
}

Matrix su_iwasawa_basis(int p, int q) {
  if (q < 0 || p < q || p + q < 1) throw InvalidArgument("Iwasawa basis needs p >= q >= 0");
  const int n = p + q;
  Matrix b(n, n);
  int col = 0;
  for (int i = 0; i < q; ++i, ++col) {
    b(i, col) = 1;
    b(2 * q - 1 - i, col) = 1;
  }
  for (int k = 2 * q; k < n; ++k, ++col) b(k, col) = 1;
  for (int j = 0; j < q; ++j, ++col) {
    b(q - 1 - j, col) = 1;
    b(q + j, col) = -1;
  }
  return b;
}

bool schubert_cell_membership(const FlagMatrix& flag, const Permutation& w, const Matrix& reference) {
  const int n = flag.n();
  if (w.size() != n || reference.rows() != n || reference.cols() != n)
    throw InvalidArgument("flag, permutation and reference sizes differ");
  if (flag.dims().back() != n) throw InvalidArgument("cell membership needs a flag ending in C^n");
  const Matrix coords = inverse(reference) * flag.matrix();
  for (int di : flag.dims()) {
    for (int j = 1; j < n; ++j) {
      int expected = 0;
      for (int k = 1; k <= di; ++k)
        if (w(k) <= j) ++expected;
      // V_i cap F_j: vectors of V_i with vanishing coordinates j+1..n
      if (di - rank(coords.block(j, 0, n - j, di)) != expected) return false;
    }
  }
  return true;
}

FlagMatrix random_cell_sample(const Permutation& w, const Matrix& reference, std::uint64_t seed,
                              const std::optional<DimensionSequence>& dims) {
  const int n = w.size();
  if (reference.rows() != n || reference.cols() != n)
    throw InvalidArgument("reference size does not match the permutation");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-100, 100), den(1, 100);
  auto draw = [&] {
    mpq_class re(num(rng), den(rng)), im(num(rng), den(rng));
    re.canonicalize();
    im.canonicalize();
    return GaussianRational(re, im);
  };
  Matrix cell(n, n);
  std::vector<bool> used(n + 1, false);
  for (int c = 0; c < n; ++c) {
    const int pivot = w(c + 1);
    cell(pivot - 1, c) = 1;
    for (int r = 1; r < pivot; ++r)
      if (!used[r]) cell(r - 1, c) = draw();
    used[pivot] = true;
  }
  Matrix standard = reference * cell;
  if (dims) return FlagMatrix(std::move(standard), dims->prefix_sums());
  return FlagMatrix::complete(std::move(standard));
}

}  // namespace flagslice
