#include "flagslice/slnr.hpp"

#include <algorithm>
#include <set>

#include "flagslice/parallel.hpp"

namespace flagslice {

Permutation KlSplit::join() const {
  std::vector<int> word = k;
  if (middle) word.push_back(*middle);
  word.insert(word.end(), l.rbegin(), l.rend());
  return Permutation(std::move(word));
}

KlSplit kl_split(const Permutation& w) {
  const int n = w.size(), m = n / 2;
  KlSplit out;
  for (int i = 1; i <= m; ++i) {
    out.k.push_back(w(i));
    out.l.push_back(w(n - i + 1));
  }
  if (n % 2) out.middle = w(m + 1);
  return out;
}

bool spacing_check(const Permutation& w) {
  const auto kl = kl_split(w);
  for (std::size_t i = 0; i < kl.k.size(); ++i)
    if (kl.l[i] >= kl.k[i]) return false;
  return true;
}

namespace {

std::vector<int> iota_from_one(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  return v;
}

// Removes k and its immediate predecessor from `residual`; false if the
// predecessor is not `l`.
bool take_consecutive(std::vector<int>& residual, int k, int l) {
  auto it = std::find(residual.begin(), residual.end(), k);
  if (it == residual.end() || it == residual.begin() || *(it - 1) != l) return false;
  residual.erase(it - 1, it + 1);
  return true;
}

void build_gb(std::vector<int>& residual, std::vector<int>& k, std::vector<int>& l,
              std::vector<Permutation>& out) {
  if (residual.size() < 2) {
    KlSplit kl{k, l, residual.empty() ? std::nullopt : std::optional<int>(residual[0])};
    out.push_back(kl.join());
    return;
  }
  for (std::size_t t = 1; t < residual.size(); ++t) {
    const int kv = residual[t], lv = residual[t - 1];
    std::vector<int> rest;
    rest.reserve(residual.size() - 2);
    for (std::size_t j = 0; j < residual.size(); ++j)
      if (j != t && j + 1 != t) rest.push_back(residual[j]);
    k.push_back(kv);
    l.push_back(lv);
    build_gb(rest, k, l, out);
    k.pop_back();
    l.pop_back();
  }
}

int sign_of_sequence(const std::vector<int>& seq) {
  int inversions = 0;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      if (seq[i] > seq[j]) ++inversions;
  return inversions % 2 ? -1 : 1;
}

SymmetryClassification require_symmetric(const DimensionSequence& d) {
  auto c = classify_symmetry(d);
  if (!c.symmetric())
    throw InvalidArgument("dimension sequence " + to_string(d) + " is not symmetric");
  return c;
}

struct BlockPair {
  std::vector<int> k, l;  // sorted
};

// Symmetric block pairs (B_j, B~_j) and the sorted middle block.
std::vector<BlockPair> block_pairs(const Permutation& w, const DimensionSequence& d,
                                   std::vector<int>* middle) {
  const auto c = require_symmetric(d);
  auto parts = blocks(w, d);
  std::vector<BlockPair> out;
  const std::size_t s = c.core.size();
  for (std::size_t j = 0; j < s; ++j) {
    BlockPair bp{parts[j], parts[parts.size() - 1 - j]};
    std::sort(bp.k.begin(), bp.k.end());
    std::sort(bp.l.begin(), bp.l.end());
    out.push_back(std::move(bp));
  }
  if (middle) {
    middle->clear();
    if (c.middle) {
      *middle = parts[s];
      std::sort(middle->begin(), middle->end());
    }
  }
  return out;
}

Permutation assemble(const std::vector<BlockPair>& pairs, const std::vector<int>& middle,
                     bool reverse_tilde) {
  std::vector<int> word;
  for (const auto& bp : pairs) word.insert(word.end(), bp.k.begin(), bp.k.end());
  word.insert(word.end(), middle.begin(), middle.end());
  for (auto it = pairs.rbegin(); it != pairs.rend(); ++it) {
    if (reverse_tilde) word.insert(word.end(), it->l.rbegin(), it->l.rend());
    else word.insert(word.end(), it->l.begin(), it->l.end());
  }
  return Permutation(std::move(word));
}

void build_measurable(const std::vector<int>& core, std::size_t j, const std::vector<int>& residual,
                      std::vector<BlockPair>& chosen, std::vector<Permutation>& out) {
  if (j == core.size()) {
    out.push_back(assemble(chosen, residual, false));
    return;
  }
  const int want = core[j];
  // positions t of k in residual, t >= 1, consecutive choices at least 2 apart
  std::vector<std::size_t> picks;
  auto recurse = [&](auto&& self, std::size_t from) -> void {
    if (static_cast<int>(picks.size()) == want) {
      BlockPair bp;
      std::vector<bool> drop(residual.size(), false);
      for (auto t : picks) {
        bp.k.push_back(residual[t]);
        bp.l.push_back(residual[t - 1]);
        drop[t] = drop[t - 1] = true;
      }
      std::vector<int> rest;
      for (std::size_t i = 0; i < residual.size(); ++i)
        if (!drop[i]) rest.push_back(residual[i]);
      chosen.push_back(std::move(bp));
      build_measurable(core, j + 1, rest, chosen, out);
      chosen.pop_back();
      return;
    }
    for (std::size_t t = from; t < residual.size(); ++t) {
      picks.push_back(t);
      self(self, t + 2);
      picks.pop_back();
    }
  };
  recurse(recurse, 1);
}

}  // namespace

bool double_box_check(const Permutation& w) {
  const auto kl = kl_split(w);
  auto residual = iota_from_one(w.size());
  for (std::size_t i = 0; i < kl.k.size(); ++i)
    if (!take_consecutive(residual, kl.k[i], kl.l[i])) return false;
  return true;
}

std::vector<Permutation> enumerate_gb(int n) {
  if (n < 1) throw InvalidArgument("enumerate_gb needs n >= 1");
  if (n == 1) return {};
  // One task per choice of (k_1, l_1).
  auto chunks = parallel_map(static_cast<std::size_t>(n - 1), [n](std::size_t t) {
    std::vector<int> residual;
    for (int v = 1; v <= n; ++v)
      if (v != static_cast<int>(t) + 1 && v != static_cast<int>(t) + 2) residual.push_back(v);
    std::vector<int> k{static_cast<int>(t) + 2}, l{static_cast<int>(t) + 1};
    std::vector<Permutation> out;
    build_gb(residual, k, l, out);
    return out;
  });
  std::vector<Permutation> out;
  for (auto& c : chunks) out.insert(out.end(), c.begin(), c.end());
  std::sort(out.begin(), out.end());
  return out;
}

int cycle_dimension_gb(int n) {
  if (n < 1) throw InvalidArgument("cycle dimension needs n >= 1");
  const int m = n / 2;
  return n % 2 ? m * m : m * m - m;
}

std::vector<SignedPoint> intersection_points_gb(const Permutation& w) {
  if (!double_box_check(w))
    throw InvalidArgument("permutation " + to_string(w) + " fails the double box condition");
  const int n = w.size();
  const auto kl = kl_split(w);
  const int m = static_cast<int>(kl.k.size());
  std::vector<int> real_order;  // positions of Re/Im parts for the orientation sign
  for (int j = 0; j < m; ++j) {
    real_order.push_back(kl.k[j]);
    real_order.push_back(kl.l[j]);
  }
  const int base_sign = sign_of_sequence(real_order);
  std::vector<SignedPoint> out;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    Matrix cols(n, n);
    std::vector<int> signs(m);
    int product = 1;
    for (int j = 0; j < m; ++j) {
      signs[j] = (mask >> j) & 1u ? -1 : 1;
      product *= signs[j];
      cols(kl.l[j] - 1, j) = GaussianRational(0, signs[j]);
      cols(kl.k[j] - 1, j) = 1;
    }
    int c = m;
    if (kl.middle) cols(*kl.middle - 1, c++) = 1;
    for (int j = m - 1; j >= 0; --j) cols(kl.l[j] - 1, c++) = 1;
    out.push_back({FlagMatrix::complete(std::move(cols)), n % 2 ? 0 : base_sign * product, signs});
  }
  return out;
}

std::vector<SignedPoint> with_orientation(const std::vector<SignedPoint>& points, int orientation) {
  std::vector<SignedPoint> out;
  for (const auto& p : points)
    if (p.orientation == orientation) out.push_back(p);
  return out;
}

bool generalized_spacing_check(const Permutation& w, const DimensionSequence& d) {
  for (const auto& bp : block_pairs(w, d, nullptr))
    for (std::size_t i = 0; i < bp.k.size(); ++i)
      if (bp.l[i] >= bp.k[i]) return false;
  return true;
}

bool generalized_double_box_check(const Permutation& w, const DimensionSequence& d) {
  auto pairs = block_pairs(w, d, nullptr);
  auto residual = iota_from_one(w.size());
  for (const auto& bp : pairs) {
    // The predecessor map is increasing on the residual set, so sorted k's
    // must meet sorted l's position by position.
    std::vector<int> preds;
    for (int k : bp.k) {
      auto it = std::find(residual.begin(), residual.end(), k);
      if (it == residual.begin()) return false;
      preds.push_back(*(it - 1));
    }
    if (preds != bp.l) return false;
    std::erase_if(residual, [&](int v) {
      return std::binary_search(bp.k.begin(), bp.k.end(), v) ||
             std::binary_search(bp.l.begin(), bp.l.end(), v);
    });
  }
  return true;
}

Permutation canonical_rearrangement(const Permutation& w, const DimensionSequence& d) {
  if (!generalized_double_box_check(w, d))
    throw InvalidArgument("permutation " + to_string(w) +
                          " fails the generalized double box condition for " + to_string(d));
  std::vector<int> middle;
  auto pairs = block_pairs(w, d, &middle);
  std::rotate(middle.begin(), middle.begin() + (middle.size() + 1) / 2, middle.end());
  return assemble(pairs, middle, true);
}

int canonical_length_drop(const DimensionSequence& d) {
  const auto c = require_symmetric(d);
  int drop = 0;
  for (int di : c.core) drop += di * (di - 1) / 2;
  if (c.middle) {
    const int e = *c.middle;
    drop += e % 2 ? (e - 1) * (e + 1) / 4 : (e / 2) * (e / 2);
  }
  return drop;
}

std::vector<Permutation> enumerate_measurable(const DimensionSequence& d) {
  const auto c = require_symmetric(d);
  std::vector<Permutation> out;
  std::vector<BlockPair> chosen;
  build_measurable(c.core, 0, iota_from_one(d.n()), chosen, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t intersection_count_measurable(const DimensionSequence& d) {
  const auto c = require_symmetric(d);
  int core_sum = 0;
  for (int di : c.core) core_sum += di;
  if (core_sum == 0) return 1;  // d = (n): the flag manifold is a point
  const bool n_odd = d.n() % 2;
  if (c.kind == SymmetryClassification::Kind::symmetric_e)
    return std::uint64_t{1} << (n_odd ? core_sum : core_sum - 1);
  return std::uint64_t{1} << (d.n() / 2 - 1);
}

MeasurableModel measurable_model(const DimensionSequence& f) {
  const int n = f.n();
  std::set<int> cuts;
  for (int x : f.prefix_sums()) {
    cuts.insert(x);
    if (x < n) cuts.insert(n - x);
  }
  std::vector<int> dhat;
  int prev = 0;
  for (int x : cuts) {
    dhat.push_back(x - prev);
    prev = x;
  }
  std::vector<int> t, delta;
  std::size_t i = 0;
  for (int part : f.parts()) {
    int acc = 0, count = 0;
    while (acc < part) {
      acc += dhat[i++];
      ++count;
    }
    t.push_back(count);
    delta.push_back((delta.empty() ? 0 : delta.back()) + count);
  }
  return {f, DimensionSequence(dhat), t, delta};
}

bool strictly_decreasing_blocks_check(const Permutation& w, const MeasurableModel& model) {
  if (!is_minimal_representative(w, model.dhat))
    throw InvalidArgument("expected a minimal representative for " + to_string(model.dhat));
  const auto parts = blocks(w, model.dhat);
  std::size_t b = 0;
  for (int size : model.t) {
    for (int i = 0; i + 1 < size; ++i)
      if (parts[b + i + 1].back() >= parts[b + i].front()) return false;
    b += size;
  }
  return true;
}

Permutation project_to_model(const Permutation& w, const MeasurableModel& model) {
  const auto parts = blocks(w, model.dhat);
  std::vector<std::vector<int>> merged;
  std::size_t b = 0;
  for (int size : model.t) {
    std::vector<int> group;
    for (int i = 0; i < size; ++i) group.insert(group.end(), parts[b + i].begin(), parts[b + i].end());
    std::sort(group.begin(), group.end());
    merged.push_back(std::move(group));
    b += size;
  }
  return from_blocks(merged);
}

int projection_length_drop(const MeasurableModel& model) {
  int drop = 0;
  std::size_t b = 0;
  for (int size : model.t) {
    for (int h = 0; h < size; ++h)
      for (int g = h + 1; g < size; ++g) drop += model.dhat.part(b + h) * model.dhat.part(b + g);
    b += size;
  }
  return drop;
}

std::vector<Permutation> project_measurable(const std::vector<Permutation>& measurable,
                                            const MeasurableModel& model) {
  std::vector<Permutation> out;
  for (const auto& w : measurable)
    if (strictly_decreasing_blocks_check(w, model)) out.push_back(project_to_model(w, model));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<Permutation> measurable_lift(const Permutation& w, const std::vector<Permutation>& measurable,
                                           const MeasurableModel& model) {
  for (const auto& candidate : measurable)
    if (strictly_decreasing_blocks_check(candidate, model) && project_to_model(candidate, model) == w)
      return candidate;
  return std::nullopt;
}

std::vector<Permutation> enumerate_nonmeasurable(const DimensionSequence& f) {
  const auto model = measurable_model(f);
  return project_measurable(enumerate_measurable(model.dhat), model);
}

std::vector<Permutation> enumerate_slnr(const DimensionSequence& d) {
  if (d.is_full()) return enumerate_gb(d.n());
  if (classify_symmetry(d).symmetric()) return enumerate_measurable(d);
  return enumerate_nonmeasurable(d);
}

int base_cycle_codimension(const DimensionSequence& d) {
  const int n = d.n(), m = n / 2;
  const int complete = n % 2 ? m * m + m : m * m;
  if (classify_symmetry(d).symmetric()) return complete - canonical_length_drop(d);
  const auto model = measurable_model(d);
  return base_cycle_codimension(model.dhat) - projection_length_drop(model);
}

std::vector<FlagMatrix> intersection_points(const Permutation& w, const DimensionSequence& d) {
  Permutation complete_lift;
  if (d.is_full()) {
    complete_lift = w;
  } else if (classify_symmetry(d).symmetric()) {
    complete_lift = canonical_rearrangement(w, d);
  } else {
    const auto model = measurable_model(d);
    auto lift = measurable_lift(w, enumerate_measurable(model.dhat), model);
    if (!lift) throw InvalidArgument("permutation " + to_string(w) + " does not meet the base cycle");
    complete_lift = canonical_rearrangement(*lift, model.dhat);
  }
  std::vector<FlagMatrix> out;
  for (const auto& point : intersection_points_gb(complete_lift)) {
    FlagMatrix flag = d.is_full() ? point.flag : point.flag.coarsen(d);
    bool seen = false;
    for (const auto& f : out)
      if (same_flag(f, flag)) {
        seen = true;
        break;
      }
    if (!seen) out.push_back(std::move(flag));
  }
  return out;
}

}  // namespace flagslice
