#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "flagslice/combinatorics.hpp"
#include "flagslice/orbit.hpp"

namespace flagslice {

enum class RealForm { slnr, slmh, supq };
std::string to_string(RealForm form);
RealForm parse_real_form(const std::string& text);

struct FormParams {
  int n = 0;  // slnr, slmh
  int p = 0, q = 0;  // supq
};

struct HomologyExpansion {
  std::uint64_t coefficient = 1;
  std::vector<Permutation> classes;
  nlohmann::json context;

  nlohmann::json to_json() const;
};

// `d` defaults to the complete flag; supq needs an orbit.
HomologyExpansion base_cycle_class(RealForm form, const FormParams& params,
                                   const std::optional<DimensionSequence>& d,
                                   const std::optional<OrbitDescriptor>& orbit);
HomologyExpansion total_cycle_class_su(int p, int q);

}  // namespace flagslice
