#pragma once

#include <cstdint>
#include <vector>

#include <json.hpp>

#include "flagslice/combinatorics.hpp"
#include "flagslice/gaussian.hpp"

namespace flagslice {

// Column spans of the first dims[i] columns give the flag V_1 < ... < V_s.
class FlagMatrix {
 public:
  FlagMatrix() = default;
  FlagMatrix(Matrix columns, std::vector<int> dims);
  static FlagMatrix complete(Matrix columns);
  // Coordinate flag of e_{w(1)}, e_{w(2)}, ... in the standard basis.
  static FlagMatrix coordinate(const Permutation& w);

  int n() const { return columns_.rows(); }
  const Matrix& matrix() const { return columns_; }
  const std::vector<int>& dims() const { return dims_; }
  Matrix subspace(int i) const { return columns_.left_columns(dims_[i]); }
  // Same columns, coarser type d (every prefix sum of d must be one of dims).
  FlagMatrix coarsen(const DimensionSequence& d) const;

  nlohmann::json to_json() const;
  static FlagMatrix from_json(const nlohmann::json& j);

 private:
  Matrix columns_;
  std::vector<int> dims_;
};

// Equality of flags as nested column spans.
bool same_flag(const FlagMatrix& a, const FlagMatrix& b);

}  // namespace flagslice
