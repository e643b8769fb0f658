#include "flagslice/slmh.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "flagslice/slnr.hpp"

namespace flagslice {

namespace {

void require_even(int n) {
  if (n % 2) throw InvalidArgument("quaternionic form needs even n, got " + std::to_string(n));
}

bool quaternionic_pair(int k, int l) { return l < k || (k % 2 == 1 && l == k + 1); }
bool strict_pair(int k, int l) { return k % 2 == 1 && l == k + 1; }

SymmetryClassification require_symmetric_even(const DimensionSequence& d) {
  require_even(d.n());
  auto c = classify_symmetry(d);
  if (!c.symmetric())
    throw InvalidArgument("dimension sequence " + to_string(d) + " is not symmetric");
  return c;
}

// Sorted block pairs (B_j, B~_j).
std::vector<std::pair<std::vector<int>, std::vector<int>>> sorted_pairs(const Permutation& w,
                                                                        const SymmetryClassification& c,
                                                                        const DimensionSequence& d) {
  auto parts = blocks(w, d);
  std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
  for (std::size_t j = 0; j < c.core.size(); ++j) {
    auto k = parts[j], l = parts[parts.size() - 1 - j];
    std::sort(k.begin(), k.end());
    std::sort(l.begin(), l.end());
    out.emplace_back(std::move(k), std::move(l));
  }
  return out;
}

// Kuhn's augmenting paths.
bool has_perfect_matching(const std::vector<int>& ks, const std::vector<int>& ls) {
  const std::size_t size = ks.size();
  std::vector<int> owner(size, -1);
  for (std::size_t a = 0; a < size; ++a) {
    std::vector<bool> visited(size, false);
    std::function<bool(std::size_t)> augment = [&](std::size_t x) {
      for (std::size_t y = 0; y < size; ++y) {
        if (visited[y] || !quaternionic_pair(ks[x], ls[y])) continue;
        visited[y] = true;
        if (owner[y] < 0 || augment(static_cast<std::size_t>(owner[y]))) {
          owner[y] = static_cast<int>(x);
          return true;
        }
      }
      return false;
    };
    if (!augment(a)) return false;
  }
  return true;
}

}  // namespace

bool spacing_check_h(const Permutation& w) {
  require_even(w.size());
  const auto kl = kl_split(w);
  for (std::size_t i = 0; i < kl.k.size(); ++i)
    if (!quaternionic_pair(kl.k[i], kl.l[i])) return false;
  return true;
}

bool strictly_pairing_check_h(const Permutation& w) {
  require_even(w.size());
  const auto kl = kl_split(w);
  for (std::size_t i = 0; i < kl.k.size(); ++i)
    if (!strict_pair(kl.k[i], kl.l[i])) return false;
  return true;
}

Permutation sigma_m_to_w(const Permutation& s) {
  KlSplit kl;
  for (int v : s.word()) {
    kl.k.push_back(2 * v - 1);
    kl.l.push_back(2 * v);
  }
  return kl.join();
}

Permutation w_to_sigma_m(const Permutation& w) {
  if (!strictly_pairing_check_h(w))
    throw InvalidArgument("permutation " + to_string(w) + " is not strictly pairing");
  std::vector<int> s;
  for (int k : kl_split(w).k) s.push_back((k + 1) / 2);
  return Permutation(std::move(s));
}

std::vector<Permutation> enumerate_gb_h(int m) {
  if (m < 1) throw InvalidArgument("enumerate_gb_h needs m >= 1");
  std::vector<int> s(m);
  std::iota(s.begin(), s.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(sigma_m_to_w(Permutation(s)));
  } while (std::next_permutation(s.begin(), s.end()));
  std::sort(out.begin(), out.end());
  return out;
}

int cycle_dimension_gb_h(int m) { return m * m; }
int schubert_dimension_gb_h(int m) { return m * m - m; }

FlagMatrix intersection_point_h(const Permutation& w) {
  const Permutation s = w_to_sigma_m(w);
  const int m = s.size(), n = 2 * m;
  Matrix cols(n, n);
  for (int i = 0; i < m; ++i) {
    cols(s(i + 1) - 1, i) = 1;
    cols(m + s(m - i) - 1, m + i) = -1;  // j(e_s) = -e_{m+s}
  }
  return FlagMatrix::complete(std::move(cols));
}

bool generalized_spacing_check_h(const Permutation& w, const DimensionSequence& d) {
  const auto c = require_symmetric_even(d);
  for (const auto& [k, l] : sorted_pairs(w, c, d))
    if (!has_perfect_matching(k, l)) return false;
  return true;
}

bool generalized_strictly_pairing_check_h(const Permutation& w, const DimensionSequence& d) {
  const auto c = require_symmetric_even(d);
  for (const auto& [k, l] : sorted_pairs(w, c, d))
    for (std::size_t i = 0; i < k.size(); ++i)
      if (!strict_pair(k[i], l[i])) return false;
  return true;
}

Permutation canonical_rearrangement_h(const Permutation& w, const DimensionSequence& d) {
  if (!generalized_strictly_pairing_check_h(w, d))
    throw InvalidArgument("permutation " + to_string(w) +
                          " fails the generalized strictly pairing condition for " + to_string(d));
  const auto c = classify_symmetry(d);
  const auto pairs = sorted_pairs(w, c, d);
  std::vector<int> word;
  for (const auto& bp : pairs) word.insert(word.end(), bp.first.begin(), bp.first.end());
  if (c.middle) {
    auto middle = blocks(w, d)[c.core.size()];
    std::sort(middle.begin(), middle.end());
    // odd-indexed entries ascending, then even-indexed entries descending
    for (std::size_t i = 0; i < middle.size(); i += 2) word.push_back(middle[i]);
    for (std::size_t i = middle.size(); i >= 2; i -= 2) word.push_back(middle[i - 1]);
  }
  for (auto it = pairs.rbegin(); it != pairs.rend(); ++it)
    word.insert(word.end(), it->second.rbegin(), it->second.rend());
  return Permutation(std::move(word));
}

int canonical_length_drop_h(const DimensionSequence& d) {
  const auto c = require_symmetric_even(d);
  int drop = 0;
  for (int di : c.core) drop += di * (di - 1) / 2;
  if (c.middle) {
    const int h = *c.middle / 2;
    drop += h * h - h;
  }
  return drop;
}

std::vector<Permutation> enumerate_measurable_h(const DimensionSequence& d) {
  const auto c = require_symmetric_even(d);
  const int m = d.n() / 2;
  std::vector<Permutation> out;
  // Choose the s-values of each block pair; B_j = {2s-1}, B~_j = {2s}.
  std::vector<std::vector<int>> chosen;
  auto recurse = [&](auto&& self, std::size_t j, std::vector<int> remaining) -> void {
    if (j == c.core.size()) {
      std::vector<int> word;
      for (const auto& sv : chosen)
        for (int s : sv) word.push_back(2 * s - 1);
      for (int s : remaining) {
        word.push_back(2 * s - 1);
        word.push_back(2 * s);
      }
      for (auto it = chosen.rbegin(); it != chosen.rend(); ++it)
        for (int s : *it) word.push_back(2 * s);
      out.emplace_back(std::move(word));
      return;
    }
    const int want = c.core[j];
    std::vector<bool> mask(remaining.size(), false);
    std::fill(mask.begin(), mask.begin() + want, true);
    do {
      std::vector<int> pick, rest;
      for (std::size_t i = 0; i < remaining.size(); ++i) (mask[i] ? pick : rest).push_back(remaining[i]);
      chosen.push_back(pick);
      self(self, j + 1, rest);
      chosen.pop_back();
    } while (std::prev_permutation(mask.begin(), mask.end()));
  };
  std::vector<int> all(m);
  std::iota(all.begin(), all.end(), 1);
  recurse(recurse, 0, all);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Permutation> enumerate_nonmeasurable_h(const DimensionSequence& f) {
  require_even(f.n());
  const auto model = measurable_model(f);
  return project_measurable(enumerate_measurable_h(model.dhat), model);
}

std::vector<Permutation> increasing_block_words(const DimensionSequence& d) {
  const auto c = require_symmetric_even(d);
  std::vector<int> sizes = c.core;
  if (c.middle) sizes.push_back(*c.middle / 2);
  std::erase(sizes, 0);
  // Minimal representatives of Sigma_m for the block sizes.
  return minimal_representatives(DimensionSequence(sizes));
}

std::vector<Permutation> enumerate_slmh(const DimensionSequence& d) {
  require_even(d.n());
  if (d.is_full()) return enumerate_gb_h(d.n() / 2);
  if (classify_symmetry(d).symmetric()) return enumerate_measurable_h(d);
  return enumerate_nonmeasurable_h(d);
}

int base_cycle_codimension_h(const DimensionSequence& d) {
  require_even(d.n());
  const int m = d.n() / 2;
  if (classify_symmetry(d).symmetric()) return m * m - m - canonical_length_drop_h(d);
  const auto model = measurable_model(d);
  return base_cycle_codimension_h(model.dhat) - projection_length_drop(model);
}

FlagMatrix intersection_point_h(const Permutation& w, const DimensionSequence& d) {
  if (d.is_full()) return intersection_point_h(w);
  if (classify_symmetry(d).symmetric())
    return intersection_point_h(canonical_rearrangement_h(w, d)).coarsen(d);
  const auto model = measurable_model(d);
  auto lift = measurable_lift(w, enumerate_measurable_h(model.dhat), model);
  if (!lift) throw InvalidArgument("permutation " + to_string(w) + " does not meet the base cycle");
  return intersection_point_h(canonical_rearrangement_h(*lift, model.dhat)).coarsen(d);
}

}  // namespace flagslice
