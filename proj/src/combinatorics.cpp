#include "flagslice/combinatorics.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>

namespace flagslice {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  const int n = size();
  if (n < 1) throw InvalidArgument("permutation must have at least one entry");
  std::vector<bool> seen(n + 1, false);
  for (int v : word_) {
    if (v < 1 || v > n || seen[v])
      throw InvalidArgument("not a permutation of 1.." + std::to_string(n));
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> word(n);
  std::iota(word.begin(), word.end(), 1);
  return Permutation(std::move(word));
}

int Permutation::position_of(int value) const {
  auto it = std::find(word_.begin(), word_.end(), value);
  if (it == word_.end()) throw InvalidArgument("value not in permutation");
  return static_cast<int>(it - word_.begin()) + 1;
}

DimensionSequence::DimensionSequence(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw InvalidArgument("dimension sequence is empty");
  for (int p : parts_) {
    if (p < 1) throw InvalidArgument("dimension sequence parts must be positive");
    n_ += p;
  }
}

DimensionSequence DimensionSequence::full(int n) {
  return DimensionSequence(std::vector<int>(n, 1));
}

std::vector<int> DimensionSequence::prefix_sums() const {
  std::vector<int> out(parts_.size());
  std::partial_sum(parts_.begin(), parts_.end(), out.begin());
  return out;
}

bool DimensionSequence::is_full() const {
  return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p == 1; });
}

DimensionSequence DimensionSequence::reversed() const {
  return DimensionSequence(std::vector<int>(parts_.rbegin(), parts_.rend()));
}

DimensionSequence SymmetryClassification::reconstruct() const {
  if (kind == Kind::asymmetric) return DimensionSequence(core);
  std::vector<int> parts = core;
  if (middle) parts.push_back(*middle);
  parts.insert(parts.end(), core.rbegin(), core.rend());
  return DimensionSequence(parts);
}

int inversion_length(const Permutation& w) {
  auto word = w.word();
  int count = 0;
  for (std::size_t i = 0; i < word.size(); ++i)
    for (std::size_t j = i + 1; j < word.size(); ++j)
      if (word[i] > word[j]) ++count;
  return count;
}

static void require_same_size(const Permutation& w, const DimensionSequence& d) {
  if (w.size() != d.n())
    throw InvalidArgument("permutation of size " + std::to_string(w.size()) +
                          " does not match dimension sequence summing to " +
                          std::to_string(d.n()));
}

std::vector<std::vector<int>> blocks(const Permutation& w, const DimensionSequence& d) {
  require_same_size(w, d);
  std::vector<std::vector<int>> out;
  auto word = w.word();
  std::size_t pos = 0;
  for (int part : d.parts()) {
    out.emplace_back(word.begin() + pos, word.begin() + pos + part);
    pos += part;
  }
  return out;
}

Permutation from_blocks(const std::vector<std::vector<int>>& parts) {
  std::vector<int> word;
  for (const auto& b : parts) word.insert(word.end(), b.begin(), b.end());
  return Permutation(std::move(word));
}

Permutation minimal_coset_representative(const Permutation& w, const DimensionSequence& d) {
  auto parts = blocks(w, d);
  for (auto& b : parts) std::sort(b.begin(), b.end());
  return from_blocks(parts);
}

bool is_minimal_representative(const Permutation& w, const DimensionSequence& d) {
  for (const auto& b : blocks(w, d))
    if (!std::is_sorted(b.begin(), b.end())) return false;
  return true;
}

int schubert_cell_dimension(const Permutation& w, const DimensionSequence& d) {
  return inversion_length(minimal_coset_representative(w, d));
}

int flag_manifold_dimension(const DimensionSequence& d) {
  int total = 0, before = 0;
  for (int p : d.parts()) {
    total += before * p;
    before += p;
  }
  return total;
}

SymmetryClassification classify_symmetry(const DimensionSequence& d) {
  auto parts = d.parts();
  SymmetryClassification out;
  if (!std::equal(parts.begin(), parts.end(), parts.rbegin())) {
    out.core.assign(parts.begin(), parts.end());
    return out;
  }
  const std::size_t half = parts.size() / 2;
  out.core.assign(parts.begin(), parts.begin() + half);
  if (parts.size() % 2 == 1) {
    out.kind = SymmetryClassification::Kind::symmetric_e;
    out.middle = parts[half];
  } else {
    out.kind = SymmetryClassification::Kind::symmetric_d;
  }
  return out;
}

std::vector<Permutation> minimal_representatives(const DimensionSequence& d) {
  // Multiset permutations of block labels, turned into sorted-block words.
  std::vector<int> labels;
  for (int b = 0; b < d.size(); ++b) labels.insert(labels.end(), d.part(b), b);
  std::vector<Permutation> out;
  do {
    // labels[v-1] is the block holding value v.
    std::vector<std::vector<int>> parts(d.size());
    for (std::size_t v = 0; v < labels.size(); ++v)
      parts[labels[v]].push_back(static_cast<int>(v) + 1);
    out.push_back(from_blocks(parts));
  } while (std::next_permutation(labels.begin(), labels.end()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<DimensionSequence> compositions(int n) {
  std::vector<DimensionSequence> out;
  if (n < 1) return out;
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::vector<int> parts;
    int run = 1;
    for (int i = 0; i < n - 1; ++i) {
      if (mask & (1u << i)) {
        parts.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    parts.push_back(run);
    out.emplace_back(parts);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t skip_factorial(int n) {
  std::uint64_t out = 1;
  for (int k = n - 1; k > 1; k -= 2) out *= static_cast<std::uint64_t>(k);
  return out;
}

std::uint64_t factorial(int n) {
  std::uint64_t out = 1;
  for (int k = 2; k <= n; ++k) out *= static_cast<std::uint64_t>(k);
  return out;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t out = 1;
  for (int i = 1; i <= k; ++i) out = out * static_cast<std::uint64_t>(n - k + i) / i;
  return out;
}

namespace {

std::vector<int> split_numbers(std::string_view text) {
  std::vector<int> out;
  bool has_separator = text.find_first_of(" ,\t") != std::string_view::npos;
  if (!has_separator) {
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw InvalidArgument("unexpected character '" + std::string(1, c) + "'");
      out.push_back(c - '0');
    }
    return out;
  }
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    out.push_back(std::stoi(token));
    token.clear();
  };
  for (char c : text) {
    if (c == ' ' || c == ',' || c == '\t') {
      flush();
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      token.push_back(c);
    } else {
      throw InvalidArgument("unexpected character '" + std::string(1, c) + "'");
    }
  }
  flush();
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Permutation parse_permutation(std::string_view text, std::optional<DimensionSequence>* grouping) {
  text = trim(text);
  if (text.empty()) throw InvalidArgument("empty permutation");
  if (text.front() != '(') {
    if (grouping) grouping->reset();
    return Permutation(split_numbers(text));
  }
  std::vector<int> word, parts;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    if (text[pos] != '(') throw InvalidArgument("expected '(' in grouped permutation");
    auto close = text.find(')', pos);
    if (close == std::string_view::npos) throw InvalidArgument("unbalanced parentheses");
    auto group = split_numbers(trim(text.substr(pos + 1, close - pos - 1)));
    if (group.empty()) throw InvalidArgument("empty block in grouped permutation");
    parts.push_back(static_cast<int>(group.size()));
    word.insert(word.end(), group.begin(), group.end());
    pos = close + 1;
  }
  Permutation w(std::move(word));
  if (grouping) *grouping = DimensionSequence(parts);
  return w;
}

DimensionSequence parse_dimension_sequence(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '(' && text.back() == ')')
    text = trim(text.substr(1, text.size() - 2));
  if (text.empty()) throw InvalidArgument("empty dimension sequence");
  std::vector<int> parts;
  std::string token;
  for (char c : text) {
    if (c == ',' || c == ' ') {
      if (!token.empty()) parts.push_back(std::stoi(token));
      token.clear();
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      token.push_back(c);
    } else {
      throw InvalidArgument("unexpected character '" + std::string(1, c) +
                            "' in dimension sequence");
    }
  }
  if (!token.empty()) parts.push_back(std::stoi(token));
  return DimensionSequence(parts);
}

static std::string join(std::span<const int> values, bool compact) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i && !compact) out << ' ';
    out << values[i];
  }
  return out.str();
}

std::string to_string(const Permutation& w) { return join(w.word(), false); }

std::string to_compact_string(const Permutation& w) { return join(w.word(), w.size() <= 9); }

std::string to_block_string(const Permutation& w, const DimensionSequence& d) {
  std::string out;
  for (const auto& b : blocks(w, d)) out += "(" + join(b, w.size() <= 9) + ")";
  return out;
}

std::string to_string(const DimensionSequence& d) {
  std::string out;
  for (int i = 0; i < d.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(d.part(i));
  }
  return out;
}

bool bruhat_leq(const Permutation& v, const Permutation& w) {
  if (v.size() != w.size()) throw InvalidArgument("permutations of different sizes");
  const int n = v.size();
  std::vector<int> a, b;
  for (int i = 1; i < n; ++i) {
    a.insert(std::upper_bound(a.begin(), a.end(), v(i)), v(i));
    b.insert(std::upper_bound(b.begin(), b.end(), w(i)), w(i));
    for (int j = 0; j < i; ++j)
      if (a[j] > b[j]) return false;
  }
  return true;
}

Permutation maximal_coset_representative(const Permutation& w, const DimensionSequence& d) {
  auto parts = blocks(w, d);
  for (auto& block : parts) std::sort(block.begin(), block.end(), std::greater<>());
  return from_blocks(parts);
}

}  // namespace flagslice
