#include "flagslice/supq.hpp"

#include <algorithm>
#include <map>

#include "flagslice/parallel.hpp"

namespace flagslice {

namespace {

void require_pq(int p, int q) {
  if (q < 0 || p < q || p + q < 1)
    throw InvalidArgument("SU(p,q) needs p >= q >= 0 and p+q >= 1, got (" + std::to_string(p) + "," +
                          std::to_string(q) + ")");
}

void require_size(const Permutation& w, int p, int q) {
  require_pq(p, q);
  if (w.size() != p + q) throw InvalidArgument("permutation size does not match p+q");
}

// Positions of the values in w, 1-based, indexed by value.
std::vector<int> positions(const Permutation& w) {
  std::vector<int> pos(w.size() + 1);
  for (int i = 1; i <= w.size(); ++i) pos[w(i)] = i;
  return pos;
}

struct Slot {
  char sign;
  int w = 0;       // value placed in the word
  int basis = 0;   // index of the standard basis vector
};

// Places pairs first..q on adjacent opposite-sign live slots, then singles.
void place_pairs(std::vector<Slot>& slots, std::vector<int>& live, int pair, int p, int q,
                 std::vector<std::vector<Slot>>& out) {
  const int n = p + q;
  if (pair > q) {
    int single = q + 1, basis = 2 * q + 1;
    auto filled = slots;
    for (int idx : live) {
      if (filled[idx].sign != '+') return;
      filled[idx].w = single++;
      filled[idx].basis = basis++;
    }
    out.push_back(std::move(filled));
    return;
  }
  for (std::size_t t = 0; t + 1 < live.size(); ++t) {
    const int left = live[t], right = live[t + 1];
    if (slots[left].sign == slots[right].sign) continue;
    slots[left].w = n - pair + 1;
    slots[right].w = pair;
    const int minus = slots[left].sign == '-' ? left : right;
    const int plus = minus == left ? right : left;
    slots[minus].basis = pair;
    slots[plus].basis = 2 * q - pair + 1;
    std::vector<int> rest;
    for (int idx : live)
      if (idx != left && idx != right) rest.push_back(idx);
    place_pairs(slots, rest, pair + 1, p, q, out);
    slots[left] = {slots[left].sign};
    slots[right] = {slots[right].sign};
  }
}

OrbitVariety to_variety(const std::vector<Slot>& slots, const DimensionSequence& d) {
  const int n = static_cast<int>(slots.size());
  std::vector<int> word;
  Matrix cols(n, n);
  for (int c = 0; c < n; ++c) {
    word.push_back(slots[c].w);
    cols(slots[c].basis - 1, c) = 1;
  }
  Permutation w = minimal_coset_representative(Permutation(std::move(word)), d);
  return {std::move(w), FlagMatrix(std::move(cols), d.prefix_sums())};
}

}  // namespace

std::uint64_t open_orbit_count(int p, int q) {
  require_pq(p, q);
  return binomial(p + q, p);
}

std::uint64_t strictly_pairing_count(int p, int q) {
  require_pq(p, q);
  std::uint64_t out = 1;
  for (int i = 0; i < q; ++i) out *= static_cast<std::uint64_t>(p + q - 1 - 2 * i);
  return out;
}

std::uint64_t fixed_points_in_cycle_count(int p, int q) {
  require_pq(p, q);
  return factorial(p) * factorial(q);
}

int cycle_dimension_su(const OrbitDescriptor& desc) {
  int out = 0, sa = 0, sb = 0;
  for (std::size_t i = 0; i < desc.a.size(); ++i) {
    out += sa * desc.a[i] + sb * desc.b[i];
    sa += desc.a[i];
    sb += desc.b[i];
  }
  return out;
}

int schubert_dimension_su(const OrbitDescriptor& desc) {
  int out = 0, sa = 0, sb = 0;
  for (std::size_t i = 0; i < desc.a.size(); ++i) {
    out += sa * desc.b[i] + sb * desc.a[i];
    sa += desc.a[i];
    sb += desc.b[i];
  }
  return out;
}

int gamma_I(int i, int p, int q) {
  require_pq(p, q);
  if (i < 1 || i > p + q) throw InvalidArgument("index out of range for gamma");
  if (i <= q) return i;
  if (i <= p) return i + q;
  return i - p + q;
}

Permutation gamma_I(const Permutation& w, int p, int q) {
  require_size(w, p, q);
  std::vector<int> word;
  for (int v : w.word()) word.push_back(gamma_I(v, p, q));
  return Permutation(std::move(word));
}

bool pairing_check(const Permutation& w, int p, int q) {
  require_size(w, p, q);
  const int n = p + q;
  const auto pos = positions(w);
  for (int i = 1; i <= q; ++i)
    if (pos[n - i + 1] > pos[i]) return false;
  return true;
}

bool strictly_pairing_check_su(const Permutation& w, int p, int q) {
  if (!pairing_check(w, p, q)) return false;
  const int n = p + q;
  std::vector<int> live(w.word().begin(), w.word().end());
  for (int i = 1; i <= q; ++i) {
    auto big = std::find(live.begin(), live.end(), n - i + 1);
    if (big + 1 == live.end() || *(big + 1) != i) return false;
    live.erase(big, big + 2);
  }
  return std::is_sorted(live.begin(), live.end());
}

std::vector<Permutation> enumerate_I_pq(int p, int q) {
  require_pq(p, q);
  const int n = p + q;
  std::vector<Permutation> out;
  std::vector<int> word(n, 0);
  auto recurse = [&](auto&& self, int pair, const std::vector<int>& live) -> void {
    if (pair > q) {
      auto filled = word;
      int single = q + 1;
      for (int idx : live) filled[idx] = single++;
      out.emplace_back(std::move(filled));
      return;
    }
    for (std::size_t t = 0; t + 1 < live.size(); ++t) {
      word[live[t]] = n - pair + 1;
      word[live[t + 1]] = pair;
      std::vector<int> rest;
      for (std::size_t j = 0; j < live.size(); ++j)
        if (j != t && j != t + 1) rest.push_back(live[j]);
      self(self, pair + 1, rest);
    }
  };
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  recurse(recurse, 1, all);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Permutation> perm_w(const Permutation& w, int p, int q) {
  require_size(w, p, q);
  const int n = p + q;
  std::vector<Permutation> out;
  for (unsigned mask = 0; mask < (1u << q); ++mask) {
    std::vector<int> word(w.word().begin(), w.word().end());
    for (int i = 1; i <= q; ++i) {
      if (!((mask >> (i - 1)) & 1u)) continue;
      for (int& v : word) {
        if (v == i) v = n - i + 1;
        else if (v == n - i + 1) v = i;
      }
    }
    out.push_back(gamma_I(Permutation(std::move(word)), p, q));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<FlagMatrix> t_w(const Permutation& w, int p, int q) {
  std::vector<FlagMatrix> out;
  for (const auto& v : perm_w(w, p, q)) out.push_back(FlagMatrix::coordinate(v));
  return out;
}

std::vector<SignSequence> all_sign_sequences(int p, int q) {
  require_pq(p, q);
  std::string signs = std::string(p, '+') + std::string(q, '-');
  std::vector<SignSequence> out;
  do {
    out.push_back({signs, {}});
  } while (std::next_permutation(signs.begin(), signs.end()));
  return out;
}

std::vector<OrbitDescriptor> all_descriptors(int p, int q, const DimensionSequence& d) {
  require_pq(p, q);
  if (d.n() != p + q) throw InvalidArgument("dimension sequence does not sum to p+q");
  std::vector<OrbitDescriptor> out;
  std::vector<int> a(d.size());
  auto recurse = [&](auto&& self, int i, int left) -> void {
    if (i == d.size()) {
      if (left) return;
      std::vector<int> b(d.size());
      for (int j = 0; j < d.size(); ++j) b[j] = d.part(j) - a[j];
      out.emplace_back(p, q, a, b);
      return;
    }
    for (int x = 0; x <= std::min(left, d.part(i)); ++x) {
      a[i] = x;
      self(self, i + 1, left - x);
    }
  };
  recurse(recurse, 0, q);
  return out;
}

std::vector<OrbitVariety> enumerate_for_orbit(const SignSequence& alpha) {
  if (!alpha.blocks.empty())
    throw InvalidArgument("complete-flag orbit label must not carry blocks: " + alpha.to_string());
  const int q = alpha.minus_count(), p = alpha.plus_count();
  require_pq(p, q);
  std::vector<Slot> slots;
  for (char c : alpha.signs) slots.push_back({c});
  std::vector<int> live(slots.size());
  for (std::size_t i = 0; i < live.size(); ++i) live[i] = static_cast<int>(i);
  std::vector<std::vector<Slot>> filled;
  place_pairs(slots, live, 1, p, q, filled);
  const auto d = DimensionSequence::full(p + q);
  std::vector<OrbitVariety> out;
  for (const auto& f : filled) out.push_back(to_variety(f, d));
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.w < y.w; });
  return out;
}

bool generalized_pairing_check(const Permutation& w, const DimensionSequence& d, int p, int q) {
  require_size(w, p, q);
  if (d.n() != p + q) throw InvalidArgument("dimension sequence does not sum to p+q");
  const int n = p + q;
  std::vector<int> block_of(n + 1);
  int b = 0, pos = 1;
  for (int part : d.parts()) {
    for (int i = 0; i < part; ++i) block_of[w(pos++)] = b;
    ++b;
  }
  for (int i = 1; i <= q; ++i)
    if (block_of[n - i + 1] > block_of[i]) return false;
  return true;
}

std::vector<OrbitVariety> enumerate_for_orbit_gp(const OrbitDescriptor& desc, std::size_t* raw_count) {
  const int p = desc.p, q = desc.q, n = p + q;
  const auto d = desc.dims();
  const auto alpha = sign_sequence_of(desc);
  std::vector<int> start(d.size());
  for (int j = 1; j < d.size(); ++j) start[j] = start[j - 1] + d.part(j - 1);
  // Pair i (i <= F) goes to block labels[i-1].
  std::vector<int> labels;
  for (int j = 0; j < d.size(); ++j) labels.insert(labels.end(), desc.overlap(j), j);
  const int first_free_pair = static_cast<int>(labels.size()) + 1;

  std::vector<std::vector<Slot>> filled;
  do {
    std::vector<Slot> slots;
    for (char c : alpha.signs) slots.push_back({c});
    std::vector<bool> used(n, false);
    std::vector<int> placed(d.size(), 0);
    for (std::size_t idx = 0; idx < labels.size(); ++idx) {
      const int pair = static_cast<int>(idx) + 1, j = labels[idx];
      const int f = desc.overlap(j), k = placed[j]++;
      const int minus_slot = start[j] + k;
      const int plus_slot = start[j] + d.part(j) - f + k;
      slots[minus_slot].w = pair;
      slots[minus_slot].basis = pair;
      slots[plus_slot].w = n - pair + 1;
      slots[plus_slot].basis = 2 * q - pair + 1;
      used[minus_slot] = used[plus_slot] = true;
    }
    std::vector<int> live;
    for (int i = 0; i < n; ++i)
      if (!used[i]) live.push_back(i);
    place_pairs(slots, live, first_free_pair, p, q, filled);
  } while (std::next_permutation(labels.begin(), labels.end()));

  if (raw_count) *raw_count = filled.size();
  std::map<Permutation, OrbitVariety> unique;
  for (const auto& f : filled) {
    auto v = to_variety(f, d);
    unique.try_emplace(v.w, std::move(v));
  }
  std::vector<OrbitVariety> out;
  for (auto& [w, v] : unique) out.push_back(std::move(v));
  return out;
}

Permutation canonical_rearrangement_su(const Permutation& w, const OrbitDescriptor& desc) {
  const int p = desc.p, q = desc.q, n = p + q;
  const auto d = desc.dims();
  require_size(w, p, q);
  std::vector<int> word;
  for (auto block : blocks(minimal_coset_representative(w, d), d)) {
    std::vector<int> small;
    int anchor = 0;
    for (int v : block) {
      if (v <= q && std::find(block.begin(), block.end(), n - v + 1) != block.end()) {
        small.push_back(v);
        anchor = std::max(anchor, n - v + 1);
      }
    }
    std::vector<int> rest;
    for (int v : block)
      if (std::find(small.begin(), small.end(), v) == small.end()) rest.push_back(v);
    if (!small.empty()) {
      auto at = std::find(rest.begin(), rest.end(), anchor) + 1;
      rest.insert(at, small.begin(), small.end());
    }
    word.insert(word.end(), rest.begin(), rest.end());
  }
  return Permutation(std::move(word));
}

SignSequence canonical_lifting(const OrbitDescriptor& desc) {
  const auto alpha = sign_sequence_of(desc);
  const auto d = desc.dims();
  SignSequence out;
  std::size_t pos = 0;
  for (int j = 0; j < d.size(); ++j) {
    const int f = desc.overlap(j);
    std::string block = alpha.signs.substr(pos, d.part(j));
    out.signs += block.substr(f) + block.substr(0, f);
    pos += d.part(j);
  }
  return out;
}

}  // namespace flagslice
