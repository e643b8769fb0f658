#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "flagslice/combinatorics.hpp"

namespace flagslice {

// Open SU(p,q) orbit on flags of type d: block i contributes a[i] negative
// and b[i] positive directions.
struct OrbitDescriptor {
  int p = 0, q = 0;
  std::vector<int> a, b;

  OrbitDescriptor() = default;
  OrbitDescriptor(int p, int q, std::vector<int> a, std::vector<int> b);
  // Cumulative counts (A_i, B_i) as in the complete-flag parametrization.
  static OrbitDescriptor from_cumulative(const std::vector<int>& neg, const std::vector<int>& pos);

  DimensionSequence dims() const;
  int overlap(int i) const { return a[i] < b[i] ? a[i] : b[i]; }
  bool operator==(const OrbitDescriptor&) const = default;
};

// Word over {-,+}; `blocks` holds block sizes, empty when ungrouped.
struct SignSequence {
  std::string signs;
  std::vector<int> blocks;

  static SignSequence parse(std::string_view text);
  std::string to_string() const;
  int minus_count() const;
  int plus_count() const;
  int size() const { return static_cast<int>(signs.size()); }
  // Block sizes, or all ones when ungrouped.
  DimensionSequence dims() const;
  bool operator==(const SignSequence&) const = default;
  auto operator<=>(const SignSequence&) const = default;
};

// Canonical parametrization: per block f minuses, |a-b| majority signs, f pluses.
SignSequence sign_sequence_of(const OrbitDescriptor& desc);
OrbitDescriptor descriptor_of(const SignSequence& alpha);

}  // namespace flagslice
