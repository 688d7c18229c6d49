#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "tkiss/disk.hpp"

namespace tkiss {

/// Translates A_0..A_n of one shared disk. offsets()[i] places A_i.
class Scene {
public:
  /// Throws InvariantViolation unless there are n + 1 offsets, t_1 = (0, 0),
  /// t_0 = (0, -(n + 1)) and the x components increase strictly from t_1 to t_n.
  Scene(std::shared_ptr<const Shape> shape, std::vector<Vec2> offsets);

  Int m() const noexcept { return shape_->m(); }
  Int n() const noexcept { return shape_->n(); }
  const Shape& shape() const noexcept { return *shape_; }
  const std::shared_ptr<const Shape>& shared_shape() const noexcept { return shape_; }
  const std::vector<Vec2>& offsets() const noexcept { return offsets_; }

  /// Rects of translate A_i in scene coordinates.
  std::vector<Rect> translate_rects(Int i) const;

private:
  std::shared_ptr<const Shape> shape_;
  std::vector<Vec2> offsets_;
};

/// Requires n >= 2 and m >= n.
void require_construction_parameters(Int m, Int n);

/// Places A_1 at the origin, then each A_i so that its first level-(n+1-i)
/// copy sits one unit right of and one unit below the second such copy of
/// A_{i-1}. A_0 is A_1 moved down by n + 1.
Scene place_translates(Int m, Int n);

/// Offsets only, for callers that already hold the shape.
std::vector<Vec2> translate_offsets(Int m, Int n);

/// Two translates of D_n^m where the first bar of the second is bar B_r of the
/// first, shifted xstar right and ystar down.
struct Lemma2Case {
  Int m = 2;
  Int n = 2;
  Int r = 1;
  Int xstar = 1;
  Int ystar = 1;

  friend auto operator<=>(const Lemma2Case&, const Lemma2Case&) = default;
};

/// Throws ParameterError unless m, n >= 2, 1 <= r <= 2^n, 1 <= xstar <= m-1 and ystar >= 1.
void validate(const Lemma2Case& c);

/// Placement of the second translate: ((r-1)m + xstar, y_r - ystar).
Vec2 lemma2_offset(const Lemma2Case& c);

/// Rects of both translates; the first is at the origin.
std::pair<std::vector<Rect>, std::vector<Rect>> lemma2_instance(const Lemma2Case& c);

/// Every case for (m, n) with 1 <= ystar <= height + 1, checked for disjoint
/// interiors. Returns the first case (in r, xstar, ystar order) that fails.
std::optional<Lemma2Case> find_lemma2_violation(Int m, Int n);

/// Number of cases find_lemma2_violation examines.
Int lemma2_case_count(Int m, Int n);

/// Why A_i and A_j (1 <= i < j <= n) cannot overlap: A_j's first bar is bar
/// B_r of A_i shifted by (j - i) right and down, where copy `copy` of level
/// n + 1 - j in A_i starts at bar r.
struct PairWitness {
  Int i = 1;
  Int j = 2;
  SubCopyRef copy;
  Int r = 1;
  Int xstar = 1;
  Int ystar = 1;
};

/// Throws ConstructionError if no copy matches.
PairWitness theorem_pair_witness(Int m, Int n, Int i, Int j);

} // namespace tkiss
