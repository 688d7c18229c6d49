#pragma once

#include <vector>

#include "tkiss/placement.hpp"

namespace tkiss {

/// Outcome for one unordered pair of translates (i < j).
struct PairVerdict {
  Int i = 0;
  Int j = 0;
  bool interiors_disjoint = false;
  /// Only filled for disjoint pairs.
  std::vector<ContactComponent> contacts;
  Int segment_length_total = 0;

  friend bool operator==(const PairVerdict&, const PairVerdict&) = default;
};

/// Everything needed to re-check the construction without rebuilding it.
struct Certificate {
  Int m = 0;
  Int n = 0;
  std::vector<Vec2> offsets;
  /// All (n+1 choose 2) pairs in lexicographic (i, j) order.
  std::vector<PairVerdict> pair_verdicts;
  /// Number of i >= 1 whose contact with A_0 includes a positive-length segment.
  Int touching_count = 0;
  bool ok = false;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct VerifyOptions {
  /// Worker threads for pair checks; the certificate does not depend on it.
  unsigned threads = 1;
};

/// Checks every pair of translates for disjoint interiors and collects the
/// contacts. ok is false (not an exception) if the construction is broken.
/// Throws ParameterError unless n >= 2 and m >= n.
Certificate verify_construction(Int m, Int n, VerifyOptions options = {});

/// Same checks on an arbitrary scene.
Certificate verify_scene(const Scene& scene, VerifyOptions options = {});

/// A maximal vertical chord of a shape over one unit column [x, x+1].
struct VerticalRun {
  Int x = 0;
  Int y0 = 0;
  Int y1 = 0;
  Int height() const noexcept { return y1 - y0; }

  friend auto operator<=>(const VerticalRun&, const VerticalRun&) = default;
};

/// All maximal vertical runs of the closed shape, column by column, sorted by (x, y0).
std::vector<VerticalRun> vertical_runs(const Shape& shape);

struct TouchingReport {
  Int m = 0;
  Int n = 0;
  Int i = 0;
  /// D is the last level-(n+1-i) copy in A_0, D' the first such copy in A_i.
  SubCopyRef d_copy;
  Vec2 d_origin;
  Vec2 d_prime_origin;
  /// d_prime_origin - d_origin; expected (i-1, n+2-i).
  Vec2 relative;
  bool offset_ok = false;

  /// Tallest vertical run of D in D's own frame, and whether it is the only
  /// run of that height and lies on the column ending at D's middle connector.
  VerticalRun tallest;
  bool tallest_unique = false;
  bool tallest_on_middle_column = false;
  bool tallest_height_ok = false;

  /// Contacts between D and D' in scene coordinates.
  std::vector<ContactComponent> contacts;
  bool has_segment = false;

  bool ok() const noexcept {
    return offset_ok && tallest_unique && tallest_on_middle_column && tallest_height_ok && has_segment;
  }
};

/// Checks the mechanism that makes A_i touch A_0. Throws ParameterError
/// unless n >= 2, m >= n and 1 <= i <= n.
TouchingReport verify_touching_heights(Int m, Int n, Int i);

} // namespace tkiss
