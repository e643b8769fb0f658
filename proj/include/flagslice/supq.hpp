#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "flagslice/combinatorics.hpp"
#include "flagslice/flag.hpp"
#include "flagslice/orbit.hpp"

namespace flagslice {

std::uint64_t open_orbit_count(int p, int q);
// (n-1)(n-3)...(n-2q+1)
std::uint64_t strictly_pairing_count(int p, int q);
std::uint64_t fixed_points_in_cycle_count(int p, int q);
int cycle_dimension_su(const OrbitDescriptor& desc);
int schubert_dimension_su(const OrbitDescriptor& desc);

int gamma_I(int i, int p, int q);
Permutation gamma_I(const Permutation& w, int p, int q);

bool pairing_check(const Permutation& w, int p, int q);
bool strictly_pairing_check_su(const Permutation& w, int p, int q);
std::vector<Permutation> enumerate_I_pq(int p, int q);
std::vector<Permutation> perm_w(const Permutation& w, int p, int q);
std::vector<FlagMatrix> t_w(const Permutation& w, int p, int q);

// Every complete-flag orbit label with q minuses and p pluses, lexicographic.
std::vector<SignSequence> all_sign_sequences(int p, int q);
// Every descriptor for the given block sizes.
std::vector<OrbitDescriptor> all_descriptors(int p, int q, const DimensionSequence& d);

struct OrbitVariety {
  Permutation w;
  FlagMatrix point;  // coordinate flag in the standard basis
};
std::vector<OrbitVariety> enumerate_for_orbit(const SignSequence& alpha);
bool generalized_pairing_check(const Permutation& w, const DimensionSequence& d, int p, int q);
// `raw_count` receives the number of constructions before removing repeats.
std::vector<OrbitVariety> enumerate_for_orbit_gp(const OrbitDescriptor& desc,
                                                 std::size_t* raw_count = nullptr);
Permutation canonical_rearrangement_su(const Permutation& w, const OrbitDescriptor& desc);
SignSequence canonical_lifting(const OrbitDescriptor& desc);

}  // namespace flagslice
