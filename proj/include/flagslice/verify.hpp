#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flagslice/combinatorics.hpp"
#include "flagslice/flag.hpp"
#include "flagslice/gaussian.hpp"

namespace flagslice {

struct CheckResult {
  explicit CheckResult(std::string check_name = {}) : name(std::move(check_name)) {}
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::string witness;  // first counterexample
  std::string note;     // informational findings that do not fail the check
};

struct VerifyOptions {
  int slnr_max_n = 6;
  int slnr_points_max_n = 8;
  int slmh_max_m = 3;
  int su_max_n = 5;         // all p >= q >= 1 with p+q <= su_max_n
  int su_points_max_n = 6;
  std::uint64_t seed = 1;
  int seeds = 20;
  int escalated_seeds = 100;
  // Corrupts one predicate to exercise failure reporting:
  // "spacing", "spacing_h" or "pairing".
  std::string inject_fault;
};

// Draws cell samples until `accept` holds; first success certifies.
bool sample_cell(const Permutation& w, const Matrix& reference, const std::optional<DimensionSequence>& dims,
                 std::uint64_t seed, int count, const std::function<bool(const FlagMatrix&)>& accept);

CheckResult check_slnr_spacing(const VerifyOptions& opts);
CheckResult check_slnr_complementary(const VerifyOptions& opts);
CheckResult check_slnr_points(const VerifyOptions& opts);
CheckResult check_slnr_partial_points(const VerifyOptions& opts);
CheckResult check_slmh_spacing(const VerifyOptions& opts);
CheckResult check_slmh_complementary(const VerifyOptions& opts);
CheckResult check_slmh_points(const VerifyOptions& opts);
CheckResult check_su_pairing(const VerifyOptions& opts);
CheckResult check_su_complementary(const VerifyOptions& opts);
CheckResult check_su_partial_pairing(const VerifyOptions& opts);
CheckResult check_su_points(const VerifyOptions& opts);
CheckResult check_su_partial_points(const VerifyOptions& opts);
CheckResult check_su_double_counting(const std::vector<std::pair<int, int>>& sizes);

std::vector<CheckResult> run_verification(const VerifyOptions& opts);
std::string format_report(const std::vector<CheckResult>& results);

}  // namespace flagslice
