#include "flagslice/orbit.hpp"

#include <algorithm>

namespace flagslice {

OrbitDescriptor::OrbitDescriptor(int p_, int q_, std::vector<int> a_, std::vector<int> b_)
    : p(p_), q(q_), a(std::move(a_)), b(std::move(b_)) {
  if (q < 0 || p < q) throw InvalidArgument("orbit descriptor needs p >= q >= 0");
  if (a.empty() || a.size() != b.size())
    throw InvalidArgument("orbit descriptor sequences must be nonempty and of equal length");
  int sa = 0, sb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 0 || b[i] < 0 || a[i] + b[i] == 0)
      throw InvalidArgument("orbit descriptor counts must be nonnegative with nonempty blocks");
    sa += a[i];
    sb += b[i];
  }
  if (sa != q || sb != p)
    throw InvalidArgument("orbit descriptor counts must sum to (q, p) = (" + std::to_string(q) +
                          ", " + std::to_string(p) + ")");
}

OrbitDescriptor OrbitDescriptor::from_cumulative(const std::vector<int>& neg,
                                                 const std::vector<int>& pos) {
  if (neg.empty() || neg.size() != pos.size())
    throw InvalidArgument("cumulative sequences must be nonempty and of equal length");
  std::vector<int> a, b;
  int pa = 0, pb = 0;
  for (std::size_t i = 0; i < neg.size(); ++i) {
    a.push_back(neg[i] - pa);
    b.push_back(pos[i] - pb);
    pa = neg[i];
    pb = pos[i];
  }
  return OrbitDescriptor(pb, pa, a, b);
}

DimensionSequence OrbitDescriptor::dims() const {
  std::vector<int> parts(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) parts[i] = a[i] + b[i];
  return DimensionSequence(parts);
}

SignSequence SignSequence::parse(std::string_view text) {
  SignSequence out;
  int current = -1;
  for (char c : text) {
    if (c == ' ') continue;
    if (c == '(') {
      if (current >= 0) throw InvalidArgument("nested '(' in sign sequence");
      current = 0;
    } else if (c == ')') {
      if (current <= 0) throw InvalidArgument("empty or unopened block in sign sequence");
      out.blocks.push_back(current);
      current = -1;
    } else if (c == '+' || c == '-') {
      out.signs.push_back(c);
      if (current >= 0) {
        ++current;
      } else if (!out.blocks.empty() || text.find('(') != std::string_view::npos) {
        out.blocks.push_back(1);
      }
    } else {
      throw InvalidArgument("unexpected character '" + std::string(1, c) + "' in sign sequence");
    }
  }
  if (current >= 0) throw InvalidArgument("unbalanced '(' in sign sequence");
  if (out.signs.empty()) throw InvalidArgument("empty sign sequence");
  if (std::all_of(out.blocks.begin(), out.blocks.end(), [](int b) { return b == 1; }))
    out.blocks.clear();
  return out;
}

std::string SignSequence::to_string() const {
  if (blocks.empty()) return signs;
  std::string out;
  std::size_t pos = 0;
  for (int b : blocks) {
    out += '(' + signs.substr(pos, b) + ')';
    pos += b;
  }
  return out;
}

int SignSequence::minus_count() const {
  return static_cast<int>(std::count(signs.begin(), signs.end(), '-'));
}

int SignSequence::plus_count() const {
  return static_cast<int>(std::count(signs.begin(), signs.end(), '+'));
}

DimensionSequence SignSequence::dims() const {
  if (blocks.empty()) return DimensionSequence::full(size());
  return DimensionSequence(blocks);
}

SignSequence sign_sequence_of(const OrbitDescriptor& desc) {
  SignSequence out;
  bool grouped = false;
  for (std::size_t i = 0; i < desc.a.size(); ++i) {
    const int f = desc.overlap(static_cast<int>(i));
    const int excess = std::abs(desc.a[i] - desc.b[i]);
    out.signs.append(f, '-');
    out.signs.append(excess, desc.a[i] > desc.b[i] ? '-' : '+');
    out.signs.append(f, '+');
    out.blocks.push_back(desc.a[i] + desc.b[i]);
    grouped = grouped || out.blocks.back() > 1;
  }
  if (!grouped) out.blocks.clear();
  return out;
}

OrbitDescriptor descriptor_of(const SignSequence& alpha) {
  auto dims = alpha.dims();
  std::vector<int> a, b;
  std::size_t pos = 0;
  for (int part : dims.parts()) {
    auto first = alpha.signs.begin() + pos;
    a.push_back(static_cast<int>(std::count(first, first + part, '-')));
    b.push_back(part - a.back());
    pos += part;
  }
  return OrbitDescriptor(alpha.plus_count(), alpha.minus_count(), a, b);
}

}  // namespace flagslice
