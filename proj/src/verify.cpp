#include "flagslice/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "flagslice/geometry.hpp"
#include "flagslice/parallel.hpp"
#include "flagslice/slmh.hpp"
#include "flagslice/slnr.hpp"
#include "flagslice/supq.hpp"

namespace flagslice {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> word(n);
  for (int i = 0; i < n; ++i) word[i] = i + 1;
  std::vector<Permutation> out;
  do {
    out.emplace_back(word);
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

std::string describe(const Permutation& w, const std::optional<DimensionSequence>& d) {
  return d && !d->is_full() ? to_block_string(w, *d) : to_compact_string(w);
}

struct SampleCase {
  Permutation w;
  std::optional<DimensionSequence> d;
  bool predicted = false;
  Matrix reference;
};

// predicted == (sampling finds a point accepted by `accept`); predicted-true
// cases escalate to the larger seed budget before failing.
CheckResult sampled_equivalence(const std::string& name, const std::vector<SampleCase>& cases,
                                const std::function<bool(const FlagMatrix&)>& accept,
                                const VerifyOptions& opts) {
  struct Outcome {
    std::string witness;
    bool escalated = false;
  };
  auto outcomes = parallel_map(cases.size(), [&](std::size_t i) {
    const auto& c = cases[i];
    const std::uint64_t base = splitmix(opts.seed ^ splitmix(i + 1));
    Outcome o;
    bool found = sample_cell(c.w, c.reference, c.d, base, opts.seeds, accept);
    if (c.predicted && !found) {
      o.escalated = true;
      found = sample_cell(c.w, c.reference, c.d, base + opts.seeds, opts.escalated_seeds - opts.seeds,
                          accept);
    }
    if (found != c.predicted)
      o.witness = describe(c.w, c.d) + (c.predicted ? " predicted to meet the open orbit, no point found in " +
                                                           std::to_string(opts.escalated_seeds) + " samples"
                                                     : " predicted empty, sampled point lies in the open orbit");
    return o;
  });
  CheckResult r{name};
  r.cases = cases.size();
  int escalations = 0;
  for (const auto& o : outcomes) {
    escalations += o.escalated;
    if (!o.witness.empty() && r.passed) {
      r.passed = false;
      r.witness = o.witness;
    }
  }
  if (escalations) r.note = std::to_string(escalations) + " case(s) needed escalated sampling";
  return r;
}

// Collects the first failure message in index order.
CheckResult collect(const std::string& name, const std::vector<std::string>& failures, std::string note = {}) {
  CheckResult r{name};
  r.cases = failures.size();
  r.note = std::move(note);
  for (const auto& f : failures)
    if (!f.empty()) {
      r.passed = false;
      r.witness = f;
      break;
    }
  return r;
}

using Predicate = std::function<bool(const Permutation&)>;

// Words lying above some word that satisfies `pred`, in Bruhat order.
Predicate upper_closure(int n, const Predicate& pred) {
  std::vector<Permutation> generators;
  for (auto& v : all_permutations(n))
    if (pred(v)) {
      bool redundant = false;
      for (const auto& g : generators) redundant = redundant || bruhat_leq(g, v);
      if (!redundant) generators.push_back(v);
    }
  return [generators](const Permutation& w) {
    for (const auto& g : generators)
      if (bruhat_leq(g, w)) return true;
    return false;
  };
}

struct StatedGap {
  int count = 0;
  std::string first;
  void add(bool stated, bool predicted, const std::string& label) {
    if (stated == predicted) return;
    if (!count++) first = label;
  }
  // Only meaningful once the sampled check agreed with the closure.
  void annotate(CheckResult& r, const std::string& condition) const {
    if (!count || !r.passed) return;
    if (!r.note.empty()) r.note += "; ";
    r.note += condition + " alone disagrees with the oracle on " + std::to_string(count) + " word(s), first " + first;
  }
};

bool corrupted_spacing(const Permutation& w) { return spacing_check(w) || w(1) == 1; }
bool corrupted_spacing_h(const Permutation& w) { return spacing_check_h(w) || w(1) == 2; }

std::vector<std::pair<int, int>> su_sizes(int max_n) {
  std::vector<std::pair<int, int>> out;
  for (int n = 2; n <= max_n; ++n)
    for (int q = 1; 2 * q <= n; ++q) out.emplace_back(n - q, q);
  return out;
}

using Canonical = std::vector<Matrix>;
Canonical canonical(const FlagMatrix& f) {
  Canonical out;
  for (std::size_t i = 0; i < f.dims().size(); ++i) out.push_back(column_echelon(f.subspace(static_cast<int>(i))));
  return out;
}

std::string key(const Canonical& c) {
  std::string out;
  for (const auto& m : c) {
    for (int r = 0; r < m.rows(); ++r)
      for (int k = 0; k < m.cols(); ++k) out += m(r, k).to_string() + ",";
    out += ";";
  }
  return out;
}

}  // namespace

bool sample_cell(const Permutation& w, const Matrix& reference, const std::optional<DimensionSequence>& dims,
                 std::uint64_t seed, int count, const std::function<bool(const FlagMatrix&)>& accept) {
  for (int k = 0; k < count; ++k)
    if (accept(random_cell_sample(w, reference, splitmix(seed + static_cast<std::uint64_t>(k)), dims)))
      return true;
  return false;
}

CheckResult check_slnr_spacing(const VerifyOptions& opts) {
  std::vector<SampleCase> cases;
  StatedGap gap;
  for (int n = 2; n <= opts.slnr_max_n; ++n) {
    const Predicate stated = opts.inject_fault == "spacing" ? Predicate(corrupted_spacing) : Predicate(spacing_check);
    const auto above = upper_closure(n, stated);
    for (auto& w : all_permutations(n)) {
      const bool predicted = above(w);
      gap.add(stated(w), predicted, to_compact_string(w));
      cases.push_back({w, std::nullopt, predicted, standard_basis(n)});
    }
  }
  auto r = sampled_equivalence("slnr cell meets open orbit <-> above a spacing word", cases,
                               [](const FlagMatrix& f) { return is_tau_generic(f, Conjugation::real); }, opts);
  gap.annotate(r, "spacing");
  return r;
}

CheckResult check_slnr_complementary(const VerifyOptions& opts) {
  std::vector<SampleCase> cases;
  for (int n = 2; n <= opts.slnr_max_n; ++n)
    for (const auto& d : compositions(n)) {
      if (d.size() == 1) continue;
      const int length = base_cycle_codimension(d);
      const auto members = enumerate_slnr(d);
      const std::set<Permutation> predicted(members.begin(), members.end());
      for (auto& w : minimal_representatives(d))
        if (inversion_length(w) == length)
          cases.push_back({w, d, predicted.count(w) > 0, standard_basis(n)});
    }
  return sampled_equivalence("slnr complementary-length membership <-> cell meets open orbit", cases,
                             [](const FlagMatrix& f) { return is_tau_generic(f, Conjugation::real); }, opts);
}

CheckResult check_slnr_points(const VerifyOptions& opts) {
  std::vector<std::pair<int, Permutation>> items;
  for (int n = 2; n <= opts.slnr_points_max_n; ++n)
    for (auto& w : enumerate_gb(n)) items.emplace_back(n, w);
  auto failures = parallel_map(items.size(), [&](std::size_t i) -> std::string {
    const auto& [n, w] = items[i];
    const int m = n / 2;
    const auto points = intersection_points_gb(w);
    const auto label = to_compact_string(w);
    if (points.size() != (std::size_t{1} << m)) return label + ": wrong number of sign patterns";
    const auto b = FormSpec::symmetric(n);
    const auto ref = standard_basis(n);
    std::map<int, int> per_class;
    std::vector<Canonical> seen;
    for (const auto& pt : points) {
      if (!schubert_cell_membership(pt.flag, w, ref)) return label + ": point outside the Schubert cell";
      if (!is_isotropic_flag(pt.flag, b)) return label + ": point not isotropic";
      if (!is_tau_generic(pt.flag, Conjugation::real)) return label + ": point not in the open orbit";
      if (n % 2 == 0 && orientation_class(pt.flag) != pt.orientation)
        return label + ": orientation tag disagrees with the real determinant";
      ++per_class[pt.orientation];
      auto c = canonical(pt.flag);
      if (std::find(seen.begin(), seen.end(), c) != seen.end()) return label + ": repeated point";
      seen.push_back(std::move(c));
    }
    if (n % 2 == 0) {
      const int want = 1 << (m - 1);
      if (per_class[1] != want || per_class[-1] != want) return label + ": orientation classes unbalanced";
    }
    return {};
  });
  return collect("slnr intersection points (cell, isotropic, open orbit, counts)", failures);
}

CheckResult check_slnr_partial_points(const VerifyOptions& opts) {
  struct Item {
    DimensionSequence d;
    Permutation w;
  };
  std::vector<Item> items;
  for (int n = 2; n <= opts.slnr_max_n; ++n)
    for (const auto& d : compositions(n)) {
      if (d.size() == 1 || d.is_full()) continue;
      for (auto& w : enumerate_slnr(d)) items.push_back({d, w});
    }
  struct Outcome {
    std::string failure;
    bool even_e_flagged = false;
  };
  auto outcomes = parallel_map(items.size(), [&](std::size_t i) -> Outcome {
    const auto& [d, w] = items[i];
    const int n = d.n();
    const auto label = to_string(d) + " " + to_block_string(w, d);
    const auto points = intersection_points(w, d);
    const auto b = FormSpec::symmetric(n);
    for (const auto& f : points) {
      if (!schubert_cell_membership(f, w, standard_basis(n))) return {label + ": point outside the Schubert cell"};
      if (!is_isotropic_flag(f, b)) return {label + ": point not isotropic"};
      if (!is_tau_generic(f, Conjugation::real)) return {label + ": point not in the open orbit"};
    }
    const auto c = classify_symmetry(d);
    if (!c.symmetric()) {
      // Projection from the measurable model is bijective on points.
      const auto model = measurable_model(d);
      const auto lift = measurable_lift(w, enumerate_measurable(model.dhat), model);
      if (intersection_points(*lift, model.dhat).size() != points.size())
        return {label + ": projection merged intersection points"};
      return {};
    }
    const auto stated = intersection_count_measurable(d);
    if (c.kind == SymmetryClassification::Kind::symmetric_d) {
      std::map<int, std::uint64_t> per_class;
      for (const auto& f : points) ++per_class[orientation_class(f)];
      if (per_class[1] != stated || per_class[-1] != stated) return {label + ": per-orientation count differs"};
      return {};
    }
    if (n % 2) return {points.size() == stated ? "" : label + ": point count differs"};
    // Even n, e-type: no middle subspace, so no orientation split is visible.
    if (points.size() != 2 * stated) return {label + ": unexpected point count"};
    return {"", true};
  });
  std::vector<std::string> failures;
  int flagged = 0;
  for (auto& o : outcomes) {
    failures.push_back(o.failure);
    flagged += o.even_e_flagged;
  }
  std::string note;
  if (flagged)
    note = std::to_string(flagged) +
           " e-type even-n variety(ies): oracle finds 2^(sum d) distinct cycle points, stated count is 2^(sum d - 1)";
  return collect("slnr partial-flag intersection points", failures, note);
}

CheckResult check_slmh_spacing(const VerifyOptions& opts) {
  std::vector<SampleCase> cases;
  StatedGap gap;
  for (int m = 1; m <= opts.slmh_max_m; ++m) {
    const Predicate stated =
        opts.inject_fault == "spacing_h" ? Predicate(corrupted_spacing_h) : Predicate(spacing_check_h);
    const auto above = upper_closure(2 * m, stated);
    for (auto& w : all_permutations(2 * m)) {
      const bool predicted = above(w);
      gap.add(stated(w), predicted, to_compact_string(w));
      cases.push_back({w, std::nullopt, predicted, quaternion_iwasawa_basis(m)});
    }
  }
  auto r = sampled_equivalence("slmh cell meets open orbit <-> above a quaternionic spacing word", cases,
                               [](const FlagMatrix& f) { return is_tau_generic(f, Conjugation::quaternion_j); },
                               opts);
  gap.annotate(r, "quaternionic spacing");
  return r;
}

CheckResult check_slmh_complementary(const VerifyOptions& opts) {
  std::vector<SampleCase> cases;
  for (int m = 1; m <= opts.slmh_max_m; ++m)
    for (const auto& d : compositions(2 * m)) {
      if (d.size() == 1) continue;
      const int length = base_cycle_codimension_h(d);
      const auto members = enumerate_slmh(d);
      const std::set<Permutation> predicted(members.begin(), members.end());
      for (auto& w : minimal_representatives(d))
        if (inversion_length(w) == length)
          cases.push_back({w, d, predicted.count(w) > 0, quaternion_iwasawa_basis(m)});
    }
  return sampled_equivalence("slmh complementary-length membership <-> cell meets open orbit", cases,
                             [](const FlagMatrix& f) { return is_tau_generic(f, Conjugation::quaternion_j); },
                             opts);
}

CheckResult check_slmh_points(const VerifyOptions& opts) {
  struct Item {
    DimensionSequence d;
    Permutation w;
  };
  std::vector<Item> items;
  for (int m = 1; m <= opts.slmh_max_m; ++m)
    for (const auto& d : compositions(2 * m)) {
      if (d.size() == 1) continue;
      for (auto& w : enumerate_slmh(d)) items.push_back({d, w});
    }
  auto failures = parallel_map(items.size(), [&](std::size_t i) -> std::string {
    const auto& [d, w] = items[i];
    const int m = d.n() / 2;
    const auto label = to_string(d) + " " + to_block_string(w, d);
    const auto f = intersection_point_h(w, d);
    if (!schubert_cell_membership(f, w, quaternion_iwasawa_basis(m))) return label + ": point outside the cell";
    if (!is_isotropic_flag(f, FormSpec::symplectic(m))) return label + ": point not isotropic";
    if (!is_tau_generic(f, Conjugation::quaternion_j)) return label + ": point not in the open orbit";
    return {};
  });
  return collect("slmh intersection points (cell, isotropic, open orbit)", failures);
}

CheckResult check_su_pairing(const VerifyOptions& opts) {
  CheckResult total{"supq cell meets an open orbit <-> above a pairing word"};
  StatedGap gap;
  for (auto [p, q] : su_sizes(opts.su_max_n)) {
    const Predicate stated = [p = p, q = q, fault = opts.inject_fault == "pairing"](const Permutation& w) {
      return pairing_check(w, p, q) || (fault && w(1) == 1);
    };
    const auto above = upper_closure(p + q, stated);
    const auto tag = "SU(" + std::to_string(p) + "," + std::to_string(q) + ") ";
    std::vector<SampleCase> cases;
    for (auto& w : all_permutations(p + q)) {
      const bool predicted = above(w);
      gap.add(stated(w), predicted, tag + to_compact_string(w));
      cases.push_back({w, std::nullopt, predicted, su_iwasawa_basis(p, q)});
    }
    auto r = sampled_equivalence(total.name, cases,
                                 [p = p, q = q](const FlagMatrix& f) { return open_orbit_label(f, p, q).has_value(); },
                                 opts);
    total.cases += r.cases;
    if (!r.passed && total.passed) {
      total.passed = false;
      total.witness = tag + r.witness;
    }
  }
  gap.annotate(total, "pairing");
  return total;
}

CheckResult check_su_complementary(const VerifyOptions& opts) {
  CheckResult total{"supq complementary-length strictly pairing <-> cell meets an open orbit"};
  for (auto [p, q] : su_sizes(opts.su_max_n)) {
    std::vector<SampleCase> cases;
    for (auto& w : all_permutations(p + q))
      if (inversion_length(w) == p * q)
        cases.push_back({w, std::nullopt, strictly_pairing_check_su(w, p, q), su_iwasawa_basis(p, q)});
    auto r = sampled_equivalence(total.name, cases,
                                 [p = p, q = q](const FlagMatrix& f) { return open_orbit_label(f, p, q).has_value(); },
                                 opts);
    total.cases += r.cases;
    if (!r.passed && total.passed) {
      total.passed = false;
      total.witness = "SU(" + std::to_string(p) + "," + std::to_string(q) + ") " + r.witness;
    }
  }
  return total;
}

CheckResult check_su_partial_pairing(const VerifyOptions& opts) {
  CheckResult total{"supq partial cell meets an open orbit <-> coset top above a pairing word"};
  StatedGap gap;
  for (auto [p, q] : su_sizes(opts.su_max_n)) {
    const auto above = upper_closure(p + q, [p = p, q = q](const Permutation& w) { return pairing_check(w, p, q); });
    const auto tag = "SU(" + std::to_string(p) + "," + std::to_string(q) + ") ";
    std::vector<SampleCase> cases;
    for (const auto& d : compositions(p + q)) {
      if (d.size() == 1 || d.is_full()) continue;
      for (auto& w : minimal_representatives(d)) {
        const bool predicted = above(maximal_coset_representative(w, d));
        gap.add(generalized_pairing_check(w, d, p, q), predicted, tag + to_block_string(w, d));
        cases.push_back({w, d, predicted, su_iwasawa_basis(p, q)});
      }
    }
    auto r = sampled_equivalence(total.name, cases,
                                 [p = p, q = q](const FlagMatrix& f) { return open_orbit_label(f, p, q).has_value(); },
                                 opts);
    total.cases += r.cases;
    if (!r.passed && total.passed) {
      total.passed = false;
      total.witness = tag + r.witness;
    }
  }
  gap.annotate(total, "generalized pairing");
  return total;
}

CheckResult check_su_points(const VerifyOptions& opts) {
  std::vector<std::string> failures;
  for (auto [p, q] : su_sizes(opts.su_points_max_n)) {
    const int n = p + q;
    const auto ref = su_iwasawa_basis(p, q);
    const auto tag = "SU(" + std::to_string(p) + "," + std::to_string(q) + ") ";
    const auto varieties = enumerate_I_pq(p, q);
    // 2^q points, one per orbit, all in their base cycles.
    auto per_w = parallel_map(varieties.size(), [&](std::size_t i) -> std::string {
      const auto& w = varieties[i];
      const auto points = t_w(w, p, q);
      if (points.size() != (std::size_t{1} << q)) return tag + to_compact_string(w) + ": |T_w| != 2^q";
      std::set<std::string> labels;
      for (const auto& f : points) {
        if (!schubert_cell_membership(f, w, ref)) return tag + to_compact_string(w) + ": T_w point outside the cell";
        auto label = open_orbit_label(f, p, q);
        if (!label) return tag + to_compact_string(w) + ": T_w point in no open orbit";
        if (!in_base_cycle_su(f, *label)) return tag + to_compact_string(w) + ": T_w point outside its base cycle";
        labels.insert(sign_sequence_of(*label).to_string());
      }
      if (labels.size() != points.size()) return tag + to_compact_string(w) + ": orbit labels repeat";
      return {};
    });
    failures.insert(failures.end(), per_w.begin(), per_w.end());
    // Per-orbit algorithm output agrees with T_w and the oracle.
    const auto orbits = all_sign_sequences(p, q);
    auto per_orbit = parallel_map(orbits.size(), [&](std::size_t i) -> std::string {
      const auto& alpha = orbits[i];
      const auto desc = descriptor_of(alpha);
      for (const auto& [w, e] : enumerate_for_orbit(alpha)) {
        const auto label = tag + alpha.to_string() + " " + to_compact_string(w);
        if (!strictly_pairing_check_su(w, p, q)) return label + ": not strictly pairing";
        if (!in_open_orbit_su(e, desc) || !in_base_cycle_su(e, desc)) return label + ": point outside the base cycle";
        if (!schubert_cell_membership(e, w, ref)) return label + ": point outside the cell";
        bool in_tw = false;
        for (const auto& f : t_w(w, p, q)) in_tw = in_tw || same_flag(f, e);
        if (!in_tw) return label + ": point not in T_w";
      }
      return {};
    });
    failures.insert(failures.end(), per_orbit.begin(), per_orbit.end());
    // Orbits met by sampled complementary cells are always predicted ones.
    if (n <= opts.su_max_n) {
      std::map<std::string, std::set<Permutation>> predicted;
      for (const auto& alpha : orbits)
        for (const auto& v : enumerate_for_orbit(alpha)) predicted[alpha.signs].insert(v.w);
      std::vector<Permutation> complementary;
      for (auto& w : all_permutations(n))
        if (inversion_length(w) == p * q) complementary.push_back(w);
      auto sampled = parallel_map(complementary.size(), [&](std::size_t i) -> std::string {
        const auto& w = complementary[i];
        for (int k = 0; k < opts.seeds; ++k) {
          const auto f = random_cell_sample(w, ref, splitmix(opts.seed + 7919 * i + k));
          auto label = open_orbit_label(f, p, q);
          if (!label) continue;
          const auto signs = sign_sequence_of(*label).signs;
          if (!predicted[signs].count(w))
            return tag + to_compact_string(w) + ": sampled point in unpredicted orbit " + signs;
        }
        return {};
      });
      failures.insert(failures.end(), sampled.begin(), sampled.end());
    }
  }
  return collect("supq intersection points (T_w, per-orbit algorithm, orbit labels)", failures);
}

CheckResult check_su_partial_points(const VerifyOptions& opts) {
  std::vector<OrbitDescriptor> descs;
  for (auto [p, q] : su_sizes(opts.su_points_max_n))
    for (const auto& d : compositions(p + q)) {
      if (d.size() == 1 || d.is_full()) continue;
      for (auto& desc : all_descriptors(p, q, d)) descs.push_back(desc);
    }
  auto failures = parallel_map(descs.size(), [&](std::size_t i) -> std::string {
    const auto& desc = descs[i];
    const int p = desc.p, q = desc.q;
    const auto d = desc.dims();
    const auto tag = "SU(" + std::to_string(p) + "," + std::to_string(q) + ") " +
                     sign_sequence_of(desc).to_string() + " ";
    std::size_t raw = 0;
    const auto varieties = enumerate_for_orbit_gp(desc, &raw);
    if (raw != varieties.size()) return tag + "construction repeats a variety";
    std::set<Permutation> lifted_members;
    for (const auto& v : enumerate_for_orbit(canonical_lifting(desc))) lifted_members.insert(v.w);
    const int length = schubert_dimension_su(desc);
    for (const auto& [w, e] : varieties) {
      const auto label = tag + to_block_string(w, d);
      if (inversion_length(w) != length) return label + ": wrong length";
      if (!generalized_pairing_check(w, d, p, q)) return label + ": fails generalized pairing";
      if (!in_open_orbit_su(e, desc) || !in_base_cycle_su(e, desc)) return label + ": point outside the base cycle";
      if (!schubert_cell_membership(e, w, su_iwasawa_basis(p, q))) return label + ": point outside the cell";
      const auto lifted = canonical_rearrangement_su(w, desc);
      if (!lifted_members.count(lifted)) return label + ": canonical rearrangement not in the lifted orbit's list";
      if (inversion_length(lifted) != p * q) return label + ": lifted word has the wrong length";
    }
    return {};
  });
  return collect("supq partial-flag orbit varieties (cell, base cycle, lifting)", failures);
}

CheckResult check_su_double_counting(const std::vector<std::pair<int, int>>& sizes) {
  std::vector<std::string> failures;
  for (auto [p, q] : sizes) {
    const auto tag = "SU(" + std::to_string(p) + "," + std::to_string(q) + ")";
    std::size_t total = 0;
    std::set<std::vector<std::string>> point_sets;
    std::size_t orbit_count = 0;
    for (const auto& alpha : all_sign_sequences(p, q)) {
      const auto varieties = enumerate_for_orbit(alpha);
      total += varieties.size();
      ++orbit_count;
      std::vector<std::string> points;
      for (const auto& v : varieties) points.push_back(key(canonical(v.point)));
      std::sort(points.begin(), points.end());
      point_sets.insert(points);
    }
    const auto expected = (std::uint64_t{1} << q) * strictly_pairing_count(p, q);
    if (total != expected)
      failures.push_back(tag + ": orbit sum " + std::to_string(total) + " != " + std::to_string(expected));
    else if (point_sets.size() != orbit_count)
      failures.push_back(tag + ": two orbits share a point set");
    else
      failures.emplace_back();
  }
  return collect("supq double counting and orbit -> point set injectivity", failures);
}

std::vector<CheckResult> run_verification(const VerifyOptions& opts) {
  return {check_slnr_spacing(opts),       check_slnr_complementary(opts), check_slnr_points(opts),
          check_slnr_partial_points(opts), check_slmh_spacing(opts),       check_slmh_complementary(opts),
          check_slmh_points(opts),         check_su_pairing(opts),         check_su_complementary(opts),
          check_su_partial_pairing(opts),  check_su_points(opts),          check_su_partial_points(opts),
          check_su_double_counting({{2, 1}, {2, 2}, {3, 2}, {4, 2}})};
}

std::string format_report(const std::vector<CheckResult>& results) {
  std::ostringstream out;
  for (const auto& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases)";
    if (!r.witness.empty()) out << " witness: " << r.witness;
    if (!r.note.empty()) out << " note: " << r.note;
    out << '\n';
  }
  return out.str();
}

}  // namespace flagslice
