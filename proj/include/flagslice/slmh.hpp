#pragma once

#include <vector>

#include "flagslice/combinatorics.hpp"
#include "flagslice/flag.hpp"

namespace flagslice {

bool spacing_check_h(const Permutation& w);
bool strictly_pairing_check_h(const Permutation& w);

// s in Sigma_m  <->  w = k_1..k_m l_m..l_1 with k_i = 2 s_i - 1, l_i = k_i + 1.
Permutation sigma_m_to_w(const Permutation& s);
Permutation w_to_sigma_m(const Permutation& w);

std::vector<Permutation> enumerate_gb_h(int m);
int cycle_dimension_gb_h(int m);
int schubert_dimension_gb_h(int m);
// Flag of e_{s_1}..e_{s_m}, j(e_{s_m})..j(e_{s_1}) in standard coordinates.
FlagMatrix intersection_point_h(const Permutation& w);

bool generalized_spacing_check_h(const Permutation& w, const DimensionSequence& d);
bool generalized_strictly_pairing_check_h(const Permutation& w, const DimensionSequence& d);
Permutation canonical_rearrangement_h(const Permutation& w, const DimensionSequence& d);
int canonical_length_drop_h(const DimensionSequence& d);
std::vector<Permutation> enumerate_measurable_h(const DimensionSequence& d);
std::vector<Permutation> enumerate_nonmeasurable_h(const DimensionSequence& f);
// Words of Sigma_m increasing inside each block of sizes (d_1..d_s, e'/2).
std::vector<Permutation> increasing_block_words(const DimensionSequence& d);

std::vector<Permutation> enumerate_slmh(const DimensionSequence& d);
int base_cycle_codimension_h(const DimensionSequence& d);
// Intersection point of type d, projected from the complete lift.
FlagMatrix intersection_point_h(const Permutation& w, const DimensionSequence& d);

}  // namespace flagslice
