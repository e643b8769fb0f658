#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "flagslice/combinatorics.hpp"
#include "flagslice/flag.hpp"

namespace flagslice {

// w = k_1..k_m [l_*] l_m..l_1
struct KlSplit {
  std::vector<int> k, l;
  std::optional<int> middle;
  Permutation join() const;
};
KlSplit kl_split(const Permutation& w);

// Symmetric refinement dhat of f; t groups consecutive dhat blocks into f.
struct MeasurableModel {
  DimensionSequence f, dhat;
  std::vector<int> t, delta;
};

bool spacing_check(const Permutation& w);
bool double_box_check(const Permutation& w);
std::vector<Permutation> enumerate_gb(int n);
int cycle_dimension_gb(int n);

struct SignedPoint {
  FlagMatrix flag;
  int orientation = 0;      // +1 / -1 for even n, 0 for odd n
  std::vector<int> signs;   // the choice of +i / -i per pair
};
// All 2^m sign patterns of the pair vectors (+-i) e_l + e_k.
std::vector<SignedPoint> intersection_points_gb(const Permutation& w);
std::vector<SignedPoint> with_orientation(const std::vector<SignedPoint>& points, int orientation);

bool generalized_spacing_check(const Permutation& w, const DimensionSequence& d);
bool generalized_double_box_check(const Permutation& w, const DimensionSequence& d);
Permutation canonical_rearrangement(const Permutation& w, const DimensionSequence& d);
// |w-hat| - |w| for a canonical rearrangement.
int canonical_length_drop(const DimensionSequence& d);
std::vector<Permutation> enumerate_measurable(const DimensionSequence& d);
std::uint64_t intersection_count_measurable(const DimensionSequence& d);

MeasurableModel measurable_model(const DimensionSequence& f);
bool strictly_decreasing_blocks_check(const Permutation& w, const MeasurableModel& model);
// Merge each group of dhat blocks and sort.
Permutation project_to_model(const Permutation& w, const MeasurableModel& model);
// |w-hat| - |w| for the projection.
int projection_length_drop(const MeasurableModel& model);
std::vector<Permutation> enumerate_nonmeasurable(const DimensionSequence& f);
// Filter-and-project step shared with the quaternionic form.
std::vector<Permutation> project_measurable(const std::vector<Permutation>& measurable,
                                            const MeasurableModel& model);
// The unique element of `measurable` projecting to w, if any.
std::optional<Permutation> measurable_lift(const Permutation& w, const std::vector<Permutation>& measurable,
                                           const MeasurableModel& model);

// Any d: dispatches to the complete, measurable or non-measurable enumerator.
std::vector<Permutation> enumerate_slnr(const DimensionSequence& d);
// Schubert dimension of the varieties meeting the base cycle, i.e. codim C_0.
int base_cycle_codimension(const DimensionSequence& d);
// Distinct intersection flags of type d, projected from the complete lift.
std::vector<FlagMatrix> intersection_points(const Permutation& w, const DimensionSequence& d);

}  // namespace flagslice
