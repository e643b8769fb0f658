#include <doctest.h>

#include <map>

#include "fixtures.hpp"
#include "flagslice/geometry.hpp"
#include "flagslice/homology.hpp"
#include "flagslice/slmh.hpp"
#include "flagslice/slnr.hpp"
#include "flagslice/supq.hpp"

using namespace flagslice;

TEST_CASE("real form names") {
  for (auto f : {RealForm::slnr, RealForm::slmh, RealForm::supq}) CHECK(parse_real_form(to_string(f)) == f);
  CHECK_THROWS_AS(parse_real_form("sl2"), InvalidArgument);
}

TEST_CASE("slnr complete flags") {
  const auto e = base_cycle_class(RealForm::slnr, {5}, std::nullopt, std::nullopt);
  CHECK(e.coefficient == 4);
  CHECK(e.classes.size() == 8);
  CHECK(base_cycle_class(RealForm::slnr, {6}, std::nullopt, std::nullopt).classes.size() == 15);
  CHECK(base_cycle_class(RealForm::slnr, {6}, std::nullopt, std::nullopt).coefficient == 4);
  CHECK(base_cycle_class(RealForm::slnr, {2}, std::nullopt, std::nullopt).coefficient == 1);
  for (int n = 2; n <= 7; ++n) {
    const auto h = base_cycle_class(RealForm::slnr, {n}, std::nullopt, std::nullopt);
    CHECK(fixtures::as_set(h.classes) == fixtures::as_set(enumerate_gb(n)));
    // even n: points of one orientation
    for (const auto& w : h.classes) {
      const auto points = intersection_points_gb(w);
      CHECK((n % 2 ? points.size() : with_orientation(points, 1).size()) == h.coefficient);
    }
  }
}

TEST_CASE("slnr partial flags count intersection points") {
  for (int n = 2; n <= 7; ++n)
    for (const auto& d : compositions(n)) {
      if (d.size() < 2 || d.is_full()) continue;
      const auto h = base_cycle_class(RealForm::slnr, {n}, d, std::nullopt);
      REQUIRE_FALSE(h.classes.empty());
      const auto kind = classify_symmetry(d).kind;
      for (const auto& w : h.classes) {
        const auto points = intersection_points(w, d);
        if (kind == SymmetryClassification::Kind::symmetric_d) {
          std::uint64_t plus = 0;
          for (const auto& f : points) plus += orientation_class(f) == 1;
          CHECK(plus == h.coefficient);
          CHECK(points.size() == 2 * h.coefficient);
        } else if (kind == SymmetryClassification::Kind::symmetric_e && n % 2 == 0) {
          // both orientations show up as distinct cycle points here
          CHECK(points.size() == 2 * h.coefficient);
        } else if (kind == SymmetryClassification::Kind::symmetric_e) {
          CHECK(points.size() == h.coefficient);
        } else {
          // same count as the lift to the measurable model
          const auto model = measurable_model(d);
          const auto lift = measurable_lift(w, enumerate_measurable(model.dhat), model);
          REQUIRE(lift);
          CHECK(points.size() == intersection_points(*lift, model.dhat).size());
          CHECK(h.coefficient == base_cycle_class(RealForm::slnr, {n}, model.dhat, std::nullopt).coefficient);
        }
      }
    }
}

TEST_CASE("slmh") {
  for (int n = 2; n <= 8; n += 2) {
    const auto h = base_cycle_class(RealForm::slmh, {n}, std::nullopt, std::nullopt);
    CHECK(h.coefficient == 1);
    CHECK(fixtures::as_set(h.classes) == fixtures::as_set(enumerate_gb_h(n / 2)));
  }
  const auto h8 = base_cycle_class(RealForm::slmh, {8}, std::nullopt, std::nullopt);
  CHECK(fixtures::as_set(h8.classes) == fixtures::parse_plain(fixtures::quaternionic_n8));
  CHECK_THROWS_AS(base_cycle_class(RealForm::slmh, {6}, DimensionSequence({2, 2}), std::nullopt), InvalidArgument);
}

TEST_CASE("supq per orbit and total") {
  FormParams pq;
  pq.p = 3;
  pq.q = 2;
  CHECK_THROWS_AS(base_cycle_class(RealForm::supq, pq, std::nullopt, std::nullopt), InvalidArgument);
  std::map<Permutation, std::uint64_t> multiplicity;
  for (const auto& alpha : all_sign_sequences(3, 2)) {
    const auto h = base_cycle_class(RealForm::supq, pq, std::nullopt, descriptor_of(alpha));
    CHECK(h.coefficient == 1);
    CHECK(h.context["orbit"] == alpha.to_string());
    for (const auto& w : h.classes) ++multiplicity[w];
  }
  const auto total = total_cycle_class_su(3, 2);
  CHECK(total.coefficient == 4);
  CHECK(total.classes.size() == 8);
  CHECK(fixtures::as_set(total.classes) == fixtures::parse_plain(fixtures::su32_listed));
  for (const auto& w : total.classes) CHECK(multiplicity[w] == total.coefficient);
  CHECK(multiplicity.size() == total.classes.size());
  CHECK(total_cycle_class_su(4, 2).classes.size() == 15);

  FormParams big;
  big.p = 7;
  big.q = 4;
  const auto gr = base_cycle_class(RealForm::supq, big, std::nullopt, OrbitDescriptor(7, 4, {3, 1}, {2, 5}));
  CHECK(fixtures::as_set(gr.classes) == fixtures::parse_plain(fixtures::gr511_listed));
  CHECK_THROWS_AS(base_cycle_class(RealForm::supq, big, DimensionSequence({4, 7}), OrbitDescriptor(7, 4, {3, 1}, {2, 5})),
                  InvalidArgument);
}

TEST_CASE("json shape") {
  const auto j = total_cycle_class_su(2, 1).to_json();
  CHECK(j["coefficient"] == 2);
  CHECK(j["classes"].size() == 2);
  CHECK(j["context"]["cycle"] == "total");
}
