#include "doctest.h"

#include "support/oracles.hpp"
#include "tkiss/placement.hpp"
#include "tkiss/ruler.hpp"

using namespace tkiss;

TEST_CASE("place_translates(4, 3)") {
  const Scene s = place_translates(4, 3);
  CHECK(s.offsets() == std::vector<Vec2>{{0, -4}, {0, 0}, {17, 6}, {26, 8}});
  CHECK(s.shape() == build_disk(4, 3));
}

TEST_CASE("placement invariants and closed-form steps") {
  for (Int n = 2; n <= 12; ++n) {
    for (Int m = n; m <= n + 3; ++m) {
      const auto t = translate_offsets(m, n);
      REQUIRE(t.size() == static_cast<std::size_t>(n + 1));
      REQUIRE(t[0] == Vec2{0, -(n + 1)});
      REQUIRE(t[1] == Vec2{0, 0});
      for (Int i = 2; i <= n; ++i) {
        const Vec2 step = t[static_cast<std::size_t>(i)] - t[static_cast<std::size_t>(i - 1)];
        REQUIRE(step == Vec2{(Int{1} << (n + 1 - i)) * m + 1, (Int{1} << (n + 2 - i)) - 2});
      }
      REQUIRE(translate_offsets(m, n) == t);
    }
  }
}

TEST_CASE("n >= 2 and m >= n are enforced") {
  CHECK_THROWS_AS(place_translates(4, 1), ParameterError);
  CHECK_THROWS_AS(place_translates(2, 3), ParameterError);
  CHECK_THROWS_AS(translate_offsets(5, 6), ParameterError);
  CHECK_NOTHROW(place_translates(2, 2));
}

TEST_CASE("Scene validates its offsets") {
  auto shape = std::make_shared<const Shape>(build_disk(4, 3));
  CHECK_THROWS_AS(Scene(shape, {{0, -4}, {0, 0}, {17, 6}}), InvariantViolation);
  CHECK_THROWS_AS(Scene(shape, {{0, -3}, {0, 0}, {17, 6}, {26, 8}}), InvariantViolation);
  CHECK_THROWS_AS(Scene(shape, {{0, -4}, {1, 0}, {17, 6}, {26, 8}}), InvariantViolation);
  CHECK_THROWS_AS(Scene(shape, {{0, -4}, {0, 0}, {17, 6}, {17, 8}}), InvariantViolation);
  CHECK_NOTHROW(Scene(shape, {{0, -4}, {0, 0}, {17, 6}, {26, 8}}));
}

TEST_CASE("lemma2 offsets") {
  CHECK(lemma2_offset({2, 2, 1, 1, 1}) == Vec2{1, -1});
  CHECK(lemma2_offset({4, 3, 5, 3, 2}) == Vec2{19, 5});

  const auto [a, b] = lemma2_instance({4, 3, 5, 3, 2});
  const Shape d = build_disk(4, 3);
  CHECK(a == d.rects());
  CHECK(b.front() == d.bar(5).translated({3, -2}));
  CHECK(union_interiors_disjoint(a, b));
}

TEST_CASE("lemma2 case validation") {
  CHECK_THROWS_AS(lemma2_offset({2, 2, 0, 1, 1}), ParameterError);
  CHECK_THROWS_AS(lemma2_offset({2, 2, 5, 1, 1}), ParameterError);
  CHECK_THROWS_AS(lemma2_offset({4, 2, 1, 0, 1}), ParameterError);
  CHECK_THROWS_AS(lemma2_offset({4, 2, 1, 4, 1}), ParameterError);
  CHECK_THROWS_AS(lemma2_offset({4, 2, 1, 1, 0}), ParameterError);
  CHECK_THROWS_AS(lemma2_offset({1, 2, 1, 1, 1}), ParameterError);
  CHECK_THROWS_AS(lemma2_offset({3, 1, 1, 1, 1}), ParameterError);
}

TEST_CASE("lemma2 exhaustive, checked against the naive oracle") {
  for (Int m = 2; m <= 4; ++m) {
    for (Int n = 2; n <= 3; ++n) {
      const Shape d = build_disk(m, n);
      for (Int r = 1; r <= d.bar_count(); ++r) {
        for (Int xs = 1; xs <= m - 1; ++xs) {
          for (Int ys = 1; ys <= d.height() + 1; ++ys) {
            const auto [a, b] = lemma2_instance({m, n, r, xs, ys});
            REQUIRE(oracle::naive_interiors_disjoint(a, b));
            REQUIRE(union_interiors_disjoint(a, b));
          }
        }
      }
      CHECK_FALSE(find_lemma2_violation(m, n).has_value());
    }
  }
  CHECK(lemma2_case_count(4, 3) == 8 * 3 * 13);
}

TEST_CASE("lemma2 bounds are tight: ystar = 0 or xstar = 0 overlaps somewhere") {
  // Outside the stated ranges the copies collide, so the checker is not vacuous.
  const Shape d = build_disk(3, 3);
  const auto base = d.rects();
  CHECK_FALSE(union_interiors_disjoint(base, d.rects({2 * 3 + 1, ruler_sum(2) - 0})));
  CHECK_FALSE(union_interiors_disjoint(base, d.rects({2 * 3 + 0, ruler_sum(2) - 1})));
}

TEST_CASE("theorem_pair_witness") {
  SUBCASE("(4,3,1,2)") {
    const auto w = theorem_pair_witness(4, 3, 1, 2);
    CHECK(w.copy == SubCopyRef{2, 2});
    CHECK(w.r == 5);
    CHECK(w.xstar == 1);
    CHECK(w.ystar == 1);
  }
  SUBCASE("(4,3,2,3)") {
    const auto w = theorem_pair_witness(4, 3, 2, 3);
    CHECK(w.copy == SubCopyRef{1, 2});
    CHECK(w.r == 3);
    CHECK(w.xstar == 1);
  }
  SUBCASE("(4,3,1,3)") {
    const auto w = theorem_pair_witness(4, 3, 1, 3);
    CHECK(w.copy == SubCopyRef{1, 4});
    CHECK(w.r == 7);
    CHECK(w.xstar == 2);
    CHECK(w.ystar == 2);
  }
  CHECK_THROWS_AS(theorem_pair_witness(4, 3, 2, 2), ParameterError);
  CHECK_THROWS_AS(theorem_pair_witness(4, 3, 0, 2), ParameterError);
  CHECK_THROWS_AS(theorem_pair_witness(4, 3, 1, 4), ParameterError);
}

TEST_CASE("every pair of non-base translates has a witness with shift in [1, m-1]") {
  for (Int n = 2; n <= 10; ++n) {
    for (Int m = n; m <= n + 2; ++m) {
      for (Int i = 1; i <= n; ++i) {
        for (Int j = i + 1; j <= n; ++j) {
          const auto w = theorem_pair_witness(m, n, i, j);
          REQUIRE(w.xstar == j - i);
          REQUIRE(w.ystar == j - i);
          REQUIRE(w.xstar >= 1);
          REQUIRE(w.xstar <= m - 1);
          REQUIRE(w.copy.level == n + 1 - j);
        }
      }
    }
  }
}
