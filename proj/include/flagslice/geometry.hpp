#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "flagslice/combinatorics.hpp"
#include "flagslice/flag.hpp"
#include "flagslice/gaussian.hpp"
#include "flagslice/orbit.hpp"

namespace flagslice {

enum class Conjugation { real, quaternion_j };

class FormSpec {
 public:
  enum class Kind { symmetric_b, symplectic_omega, hermitian_h };

  static FormSpec symmetric(int n);
  static FormSpec symplectic(int m);
  static FormSpec hermitian(int p, int q);

  Kind kind() const { return kind_; }
  int n() const { return n_; }
  int p() const { return p_; }
  int q() const { return q_; }
  // Bilinear for b and omega; linear in v, conjugate-linear in w for h.
  GaussianRational operator()(const Vector& v, const Vector& w) const;
  // gram(i, j) = form(columns i, columns j)
  Matrix gram(const Matrix& rows_side, const Matrix& cols_side) const;

 private:
  Kind kind_ = Kind::symmetric_b;
  int n_ = 0, p_ = 0, q_ = 0;
};

// Image of each column under complex conjugation or the quaternionic j.
Matrix apply_conjugation(const Matrix& m, Conjugation conj);

bool is_tau_generic(const FlagMatrix& flag, Conjugation conj);
bool is_isotropic_flag(const FlagMatrix& flag, const FormSpec& form);

struct Signature {
  int neg = 0, pos = 0, null = 0;
  bool operator==(const Signature&) const = default;
};
// Inertia of h (minus signs on the first q coordinates) restricted to the span.
Signature signature(const Matrix& basis, int p, int q);

// Orbit of a flag whose prefixes are all nondegenerate, by exact inertia.
std::optional<OrbitDescriptor> open_orbit_label(const FlagMatrix& flag, int p, int q);
bool in_open_orbit_su(const FlagMatrix& flag, const OrbitDescriptor& desc);
bool in_base_cycle_su(const FlagMatrix& flag, const OrbitDescriptor& desc);
bool is_maximally_isotropic(const FlagMatrix& flag, int p, int q);

// Sign of the real determinant of (Re v_1, Im v_1, ..., Re v_m, Im v_m)
// for the middle subspace V_m of a tau-generic flag in C^{2m}.
int orientation_class(const FlagMatrix& flag);

// Reference complete flags, as bases (columns).
Matrix standard_basis(int n);
Matrix quaternion_iwasawa_basis(int m);
Matrix su_iwasawa_basis(int p, int q);

bool schubert_cell_membership(const FlagMatrix& flag, const Permutation& w, const Matrix& reference);
// Canonical cell matrix with random rational parameters, expressed in standard
// coordinates; `dims` defaults to the complete flag.
FlagMatrix random_cell_sample(const Permutation& w, const Matrix& reference, std::uint64_t seed,
                              const std::optional<DimensionSequence>& dims = std::nullopt);

}  // namespace flagslice
