#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tkiss/geometry.hpp"

namespace tkiss {

enum class PieceRole { bar, connector };

std::string_view to_string(PieceRole role);

/// Bar B_i or connector V_i of a disk, with its 1-based construction index.
struct Piece {
  PieceRole role = PieceRole::bar;
  Int index = 1;
  Rect rect;

  friend bool operator==(const Piece&, const Piece&) = default;
};

std::string to_string(const Piece& p);

/// Rectilinear disk made of 2^n bars of width m joined by 2^n - 1 connectors.
///
/// Pieces are kept in construction order B_1, V_1, B_2, ..., B_{2^n}. Level 0
/// (a single bar) is representable so that sub-copy extraction works at every
/// level; build_disk itself requires n >= 1.
class Shape {
public:
  Shape(Int m, Int n, std::vector<Piece> pieces);

  Int m() const noexcept { return m_; }
  Int n() const noexcept { return n_; }
  const std::vector<Piece>& pieces() const noexcept { return pieces_; }

  Int bar_count() const noexcept { return (static_cast<Int>(pieces_.size()) + 1) / 2; }

  /// B_i, 1-based.
  const Rect& bar(Int i) const;
  /// V_i, 1-based.
  const Rect& connector(Int i) const;

  std::vector<Rect> rects() const;
  std::vector<Rect> rects(Vec2 offset) const;

  /// Smallest closed rect containing every piece.
  Rect bounding_box() const;
  Int height() const { return bounding_box().height(); }

  friend bool operator==(const Shape&, const Shape&) = default;

private:
  Int m_;
  Int n_;
  std::vector<Piece> pieces_;
};

/// Construct the disk for bar width m >= 2 and depth n >= 1.
///
/// Bar B_i spans [(i-1)m, im] x [y_i, y_i + 1] and connector V_i spans
/// [im - 1, im] x [y_i + 1, y_{i+1} + 1], where y_i = s_1 + ... + s_{i-1}.
Shape build_disk(Int m, Int n);

/// Deepest n accepted by build_disk. 2^(n+1) - 1 pieces are materialized.
inline constexpr Int kMaxDepth = 24;

/// Names copy `copy` (1-based, left to right) among the 2^(n - level)
/// translates of the level-`level` disk tiling a depth-n disk.
struct SubCopyRef {
  Int level = 0;
  Int copy = 1;

  friend auto operator<=>(const SubCopyRef&, const SubCopyRef&) = default;
};

/// Translation taking the origin of the level-k disk to the origin of the given
/// copy: ((j-1) 2^k m, y_{(j-1) 2^k + 1}).
Vec2 sub_copy_offset(Int m, Int n, SubCopyRef ref);

/// Pieces of one sub-copy, re-based to the origin and re-indexed from 1.
Shape extract_sub_copy(const Shape& shape, SubCopyRef ref);

/// Every broken invariant of a disk, as human-readable lines. Empty means the
/// shape has the right piece count and sizes, pairwise interior-disjoint
/// pieces, the expected bounding box, and an adjacency graph that is exactly
/// the path B_1 - V_1 - B_2 - ... - B_{2^n} with unit-length shared edges.
std::vector<std::string> shape_violations(const Shape& shape);

} // namespace tkiss
