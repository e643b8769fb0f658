#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "flagslice/error.hpp"

namespace flagslice {

// One-line notation, values 1..n.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> word);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(word_.size()); }
  // 1-based position.
  int operator()(int position) const { return word_[position - 1]; }
  std::span<const int> word() const { return word_; }
  int position_of(int value) const;

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> word_;
};

class DimensionSequence {
 public:
  DimensionSequence() = default;
  explicit DimensionSequence(std::vector<int> parts);
  static DimensionSequence full(int n);

  std::span<const int> parts() const { return parts_; }
  int part(int i) const { return parts_[i]; }
  int size() const { return static_cast<int>(parts_.size()); }
  int n() const { return n_; }
  // delta_1..delta_s; the last equals n.
  std::vector<int> prefix_sums() const;
  bool is_full() const;
  DimensionSequence reversed() const;

  auto operator<=>(const DimensionSequence&) const = default;
  bool operator==(const DimensionSequence&) const = default;

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

struct SymmetryClassification {
  enum class Kind { symmetric_d, symmetric_e, asymmetric };
  Kind kind = Kind::asymmetric;
  std::vector<int> core;  // the whole sequence when asymmetric
  std::optional<int> middle;

  DimensionSequence reconstruct() const;
  bool symmetric() const { return kind != Kind::asymmetric; }
};

int inversion_length(const Permutation& w);
// Bruhat order by the sorted-prefix (tableau) criterion.
bool bruhat_leq(const Permutation& v, const Permutation& w);
// Maximal element of the coset w W_d: each block in decreasing order.
Permutation maximal_coset_representative(const Permutation& w, const DimensionSequence& d);
Permutation minimal_coset_representative(const Permutation& w, const DimensionSequence& d);
bool is_minimal_representative(const Permutation& w, const DimensionSequence& d);
int schubert_cell_dimension(const Permutation& w, const DimensionSequence& d);
int flag_manifold_dimension(const DimensionSequence& d);
SymmetryClassification classify_symmetry(const DimensionSequence& d);
std::vector<std::vector<int>> blocks(const Permutation& w, const DimensionSequence& d);
Permutation from_blocks(const std::vector<std::vector<int>>& parts);

// Every minimal coset representative for d, lexicographic.
std::vector<Permutation> minimal_representatives(const DimensionSequence& d);
// Every composition of n, ordered by number of parts then lexicographically.
std::vector<DimensionSequence> compositions(int n);

// (n-1)(n-3)... down to 1 or 2; 1 for n <= 1.
std::uint64_t skip_factorial(int n);
std::uint64_t factorial(int n);
std::uint64_t binomial(int n, int k);

// Text forms. parse_permutation accepts "2 4 3 1", "2,4,3,1", "2431" (n <= 9)
// and parenthesized groups "(24)(13)"; groups are reported through `grouping`.
Permutation parse_permutation(std::string_view text,
                              std::optional<DimensionSequence>* grouping = nullptr);
DimensionSequence parse_dimension_sequence(std::string_view text);
std::string to_string(const Permutation& w);          // "2 4 3 1"
std::string to_compact_string(const Permutation& w);  // "2431" when n <= 9
std::string to_block_string(const Permutation& w, const DimensionSequence& d);
std::string to_string(const DimensionSequence& d);    // "2,4,3"

}  // namespace flagslice
