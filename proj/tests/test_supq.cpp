#include <doctest.h>

#include <functional>
#include <map>

#include "fixtures.hpp"
#include "flagslice/geometry.hpp"
#include "flagslice/supq.hpp"

using namespace flagslice;

namespace {

std::vector<std::pair<int, int>> sizes(int max_n) {
  std::vector<std::pair<int, int>> out;
  for (int n = 2; n <= max_n; ++n)
    for (int q = 1; 2 * q <= n; ++q) out.emplace_back(n - q, q);
  return out;
}

std::string repeat(const std::string& s, int times) {
  std::string out;
  for (int i = 0; i < times; ++i) out += s;
  return out;
}

// Every arrangement of each block, kept if one passes the complete pairing test.
bool rearrangement_oracle(const Permutation& w, const DimensionSequence& d, int p, int q) {
  auto parts = blocks(w, d);
  for (auto& b : parts) std::sort(b.begin(), b.end());
  std::function<bool(std::size_t)> go = [&](std::size_t i) -> bool {
    if (i == parts.size()) return pairing_check(from_blocks(parts), p, q);
    do {
      if (go(i + 1)) return true;
    } while (std::next_permutation(parts[i].begin(), parts[i].end()));
    return false;
  };
  return go(0);
}

}  // namespace

TEST_CASE("counting formulas") {
  CHECK(open_orbit_count(3, 2) == 10);
  CHECK(open_orbit_count(4, 0) == 1);
  CHECK(open_orbit_count(2, 2) == 6);
  CHECK(fixed_points_in_cycle_count(3, 2) == 12);
  CHECK(fixed_points_in_cycle_count(1, 1) == 1);
  CHECK(strictly_pairing_count(4, 2) == 15);
  CHECK(strictly_pairing_count(5, 3) == 105);
  for (auto [p, q] : sizes(8)) CHECK(all_sign_sequences(p, q).size() == open_orbit_count(p, q));
}

TEST_CASE("torus fixed points in a base cycle") {
  for (auto [p, q] : {std::pair{2, 1}, std::pair{2, 2}, std::pair{3, 2}}) {
    for (const auto& alpha : all_sign_sequences(p, q)) {
      const auto desc = descriptor_of(alpha);
      std::size_t count = 0;
      for (const auto& v : fixtures::all_permutations(p + q))
        count += in_base_cycle_su(FlagMatrix::coordinate(v), desc);
      CHECK(count == fixed_points_in_cycle_count(p, q));
    }
  }
}

TEST_CASE("cycle dimensions") {
  const auto gb = OrbitDescriptor::from_cumulative({0, 1, 1, 2, 2}, {1, 1, 2, 2, 3});
  CHECK(cycle_dimension_su(gb) == 4);
  CHECK(cycle_dimension_su(OrbitDescriptor(3, 2, {2}, {3})) == 0);
  const OrbitDescriptor gr(7, 4, {3, 1}, {2, 5});
  CHECK(cycle_dimension_su(gr) == 13);
  CHECK(schubert_dimension_su(gr) == 17);
  for (auto [p, q] : sizes(6))
    for (const auto& d : compositions(p + q))
      for (const auto& desc : all_descriptors(p, q, d))
        CHECK(cycle_dimension_su(desc) + schubert_dimension_su(desc) == flag_manifold_dimension(d));
}

TEST_CASE("gamma map") {
  CHECK(gamma_I(6, 4, 2) == 4);
  CHECK(gamma_I(2, 4, 2) == 2);
  CHECK(gamma_I(parse_permutation("615234"), 4, 2) == parse_permutation("413256"));
  for (int q = 1; q <= 4; ++q)
    for (int i = 1; i <= 2 * q; ++i) CHECK(gamma_I(i, q, q) == i);
}

TEST_CASE("pairing and strict pairing") {
  CHECK(pairing_check(parse_permutation("615234"), 4, 2));
  CHECK_FALSE(pairing_check(parse_permutation("162345"), 4, 2));
  CHECK(strictly_pairing_check_su(parse_permutation("615234"), 4, 2));
  CHECK_FALSE(strictly_pairing_check_su(parse_permutation("456123"), 4, 2));
  CHECK(strictly_pairing_check_su(parse_permutation("561234"), 4, 2));
  for (int n = 2; n <= 8; ++n)
    for (int q = 1; 2 * q <= n; ++q) {
      const int p = n - q;
      std::set<Permutation> strict;
      for (const auto& w : fixtures::all_permutations(n))
        if (strictly_pairing_check_su(w, p, q)) {
          CHECK(pairing_check(w, p, q));
          strict.insert(w);
        }
      CHECK(strict == fixtures::as_set(enumerate_I_pq(p, q)));
    }
}

TEST_CASE("strictly pairing enumeration") {
  CHECK(fixtures::as_set(enumerate_I_pq(3, 2)) == fixtures::parse_plain(fixtures::su32_listed));
  CHECK(fixtures::as_set(enumerate_I_pq(4, 2)) == fixtures::parse_plain(fixtures::su42_listed));
  for (int n = 2; n <= 10; ++n)
    for (int q = 1; 2 * q <= n; ++q) {
      const int p = n - q;
      const auto words = enumerate_I_pq(p, q);
      std::uint64_t m_q = 1;
      for (int i = 0; i < q; ++i) m_q *= n - 1 - 2 * i;
      CHECK(words.size() == m_q);
      CHECK(std::is_sorted(words.begin(), words.end()));
      if (q == 1) CHECK(words.size() == static_cast<std::size_t>(n - 1));
      if (n <= 8)
        for (const auto& w : words) CHECK(inversion_length(w) == p * q);
    }
}

TEST_CASE("perm and T sets") {
  CHECK(fixtures::as_set(perm_w(parse_permutation("615234"), 4, 2)) == fixtures::parse_plain(fixtures::perm_615234));
  for (auto [p, q] : sizes(6))
    for (const auto& w : enumerate_I_pq(p, q)) {
      CHECK(perm_w(w, p, q).size() == (std::size_t{1} << q));
      const auto points = t_w(w, p, q);
      CHECK(points.size() == (std::size_t{1} << q));
      std::set<std::string> labels;
      for (const auto& f : points) {
        const auto label = open_orbit_label(f, p, q);
        REQUIRE(label);
        CHECK(in_base_cycle_su(f, *label));
        CHECK(schubert_cell_membership(f, w, su_iwasawa_basis(p, q)));
        labels.insert(sign_sequence_of(*label).to_string());
      }
      CHECK(labels.size() == points.size());
    }
}

TEST_CASE("per-orbit algorithm examples") {
  for (auto [p, q] : sizes(8)) {
    const int n = p + q;
    // all pluses first
    const auto first = enumerate_for_orbit(SignSequence::parse(std::string(p, '+') + std::string(q, '-')));
    REQUIRE(first.size() == 1);
    std::vector<int> word, cols;
    for (int v = q + 1; v <= n; ++v) word.push_back(v);
    for (int v = 1; v <= q; ++v) word.push_back(v);
    CHECK(first[0].w == Permutation(word));
    std::vector<int> order;
    for (int v = 2 * q + 1; v <= n; ++v) order.push_back(v);
    for (int v = q + 1; v <= 2 * q; ++v) order.push_back(v);
    for (int v = 1; v <= q; ++v) order.push_back(v);
    CHECK(same_flag(first[0].point, FlagMatrix::coordinate(Permutation(order))));
    // trailing (+-)^q
    const auto second = enumerate_for_orbit(SignSequence::parse(std::string(p - q, '+') + repeat("+-", q)));
    CHECK(second.size() == skip_factorial(2 * q));
    // leading (+-+)^q
    if (p >= 2 * q) {
      const auto third = enumerate_for_orbit(SignSequence::parse(repeat("+-+", q) + std::string(p - 2 * q, '+')));
      std::uint64_t expected = 1;
      for (int k = 2; k <= 2 * q; k += 2) expected *= k;
      CHECK(third.size() == expected);
    }
  }
  CHECK_THROWS_AS(enumerate_for_orbit(SignSequence::parse("(-+)(+)")), InvalidArgument);
}

TEST_CASE("per-orbit algorithm output") {
  for (auto [p, q] : sizes(6))
    for (const auto& alpha : all_sign_sequences(p, q)) {
      const auto desc = descriptor_of(alpha);
      for (const auto& [w, e] : enumerate_for_orbit(alpha)) {
        CHECK(strictly_pairing_check_su(w, p, q));
        CHECK(in_base_cycle_su(e, desc));
        CHECK(schubert_cell_membership(e, w, su_iwasawa_basis(p, q)));
      }
    }
}

TEST_CASE("double counting and injectivity") {
  for (auto [p, q] : {std::pair{2, 1}, std::pair{2, 2}, std::pair{3, 2}, std::pair{4, 2}}) {
    std::size_t total = 0;
    std::map<Permutation, int> hits;
    std::set<std::set<Permutation>> point_sets;
    const auto orbits = all_sign_sequences(p, q);
    for (const auto& alpha : orbits) {
      std::set<Permutation> points;
      for (const auto& v : enumerate_for_orbit(alpha)) {
        ++hits[v.w];
        // coordinate flags: record the column order
        std::vector<int> order;
        for (int c = 0; c < p + q; ++c)
          for (int r = 0; r < p + q; ++r)
            if (!v.point.matrix()(r, c).is_zero()) order.push_back(r + 1);
        REQUIRE(order.size() == static_cast<std::size_t>(p + q));
        points.insert(Permutation(order));
      }
      total += points.size();
      point_sets.insert(points);
    }
    CHECK(total == (std::uint64_t{1} << q) * strictly_pairing_count(p, q));
    CHECK(point_sets.size() == orbits.size());
    for (const auto& [w, count] : hits) CHECK(count == (1 << q));
  }
}

TEST_CASE("generalized pairing") {
  CHECK(generalized_pairing_check(parse_permutation("341562"), DimensionSequence({1, 1, 3, 1}), 4, 2));
  CHECK_FALSE(generalized_pairing_check(parse_permutation("123456"), DimensionSequence({2, 4}), 4, 2));
  for (auto [p, q] : sizes(6))
    for (const auto& d : compositions(p + q))
      for (const auto& w : minimal_representatives(d)) {
        CHECK(generalized_pairing_check(w, d, p, q) == rearrangement_oracle(w, d, p, q));
        if (d.is_full()) CHECK(generalized_pairing_check(w, d, p, q) == pairing_check(w, p, q));
      }
}

TEST_CASE("partial flags") {
  const OrbitDescriptor gr(7, 4, {3, 1}, {2, 5});
  std::set<Permutation> produced;
  for (const auto& v : enumerate_for_orbit_gp(gr)) produced.insert(v.w);
  CHECK(produced == fixtures::parse_plain(fixtures::gr511_listed));
  // complete flags reduce to the per-orbit algorithm
  for (auto [p, q] : sizes(5))
    for (const auto& alpha : all_sign_sequences(p, q)) {
      std::set<Permutation> a, b;
      for (const auto& v : enumerate_for_orbit(alpha)) a.insert(v.w);
      for (const auto& v : enumerate_for_orbit_gp(descriptor_of(alpha))) b.insert(v.w);
      CHECK(a == b);
    }
  // two blocks: binomial count
  for (auto [p, q] : sizes(8))
    for (int k = 1; k < p + q; ++k)
      for (const auto& desc : all_descriptors(p, q, DimensionSequence({k, p + q - k}))) {
        const int f1 = desc.overlap(0), f2 = desc.overlap(1);
        CHECK(enumerate_for_orbit_gp(desc).size() == binomial(f1 + f2, std::max(f1, f2)));
      }
  for (auto [p, q] : sizes(6))
    for (const auto& d : compositions(p + q)) {
      if (d.size() == 1) continue;
      for (const auto& desc : all_descriptors(p, q, d)) {
        std::size_t raw = 0;
        const auto varieties = enumerate_for_orbit_gp(desc, &raw);
        CHECK(raw == varieties.size());
        std::set<Permutation> lifted;
        for (const auto& v : enumerate_for_orbit(canonical_lifting(desc))) lifted.insert(v.w);
        int drop = 0;
        for (std::size_t i = 0; i < desc.a.size(); ++i) drop += desc.a[i] * desc.b[i];
        for (const auto& [w, e] : varieties) {
          CHECK(is_minimal_representative(w, d));
          CHECK(inversion_length(w) == schubert_dimension_su(desc));
          CHECK(in_base_cycle_su(e, desc));
          CHECK(schubert_cell_membership(e, w, su_iwasawa_basis(p, q)));
          const auto hat = canonical_rearrangement_su(w, desc);
          CHECK(lifted.count(hat) == 1);
          CHECK(inversion_length(hat) - inversion_length(w) == drop);
        }
      }
    }
}

TEST_CASE("canonical lifting") {
  CHECK(canonical_lifting(descriptor_of(SignSequence::parse("(-+)"))).signs == "+-");
  CHECK(canonical_lifting(descriptor_of(SignSequence::parse("(-+++)(++)"))).signs == "+++-++");
  const OrbitDescriptor gr(7, 4, {3, 1}, {2, 5});
  const auto first = parse_permutation("1 2 8 10 11 3 4 5 6 7 9");
  CHECK(inversion_length(canonical_rearrangement_su(first, gr)) - inversion_length(first) == 3 * 2 + 1 * 5);
}

TEST_CASE("cells above the pairing words meet an open orbit") {
  const auto w = parse_permutation("4231");
  CHECK_FALSE(pairing_check(w, 2, 2));
  bool found = false;
  for (std::uint64_t seed = 0; seed < 20 && !found; ++seed)
    found = open_orbit_label(random_cell_sample(w, su_iwasawa_basis(2, 2), seed), 2, 2).has_value();
  CHECK(found);
}
