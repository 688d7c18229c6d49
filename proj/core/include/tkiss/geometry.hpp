#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tkiss/checked.hpp"

namespace tkiss {

struct Point {
  Int x = 0;
  Int y = 0;

  friend auto operator<=>(const Point&, const Point&) = default;
};

/// Integer translation vector.
struct Vec2 {
  Int dx = 0;
  Int dy = 0;

  friend auto operator<=>(const Vec2&, const Vec2&) = default;

  friend Vec2 operator+(Vec2 a, Vec2 b) { return {checked_add(a.dx, b.dx), checked_add(a.dy, b.dy)}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {checked_sub(a.dx, b.dx), checked_sub(a.dy, b.dy)}; }
};

inline Point operator+(Point p, Vec2 v) { return {checked_add(p.x, v.dx), checked_add(p.y, v.dy)}; }

/// Closed axis-aligned rectangle [x0, x1] x [y0, y1] with positive area.
class Rect {
public:
  /// Throws InvariantViolation unless x0 < x1 and y0 < y1.
  Rect(Int x0, Int x1, Int y0, Int y1);

  Int x0() const noexcept { return x0_; }
  Int x1() const noexcept { return x1_; }
  Int y0() const noexcept { return y0_; }
  Int y1() const noexcept { return y1_; }
  Int width() const noexcept { return x1_ - x0_; }
  Int height() const noexcept { return y1_ - y0_; }

  Rect translated(Vec2 v) const;

  friend auto operator<=>(const Rect&, const Rect&) = default;

private:
  Int x0_, x1_, y0_, y1_;
};

std::string to_string(const Rect& r);

enum class ContactKind { point, horizontal_segment, vertical_segment };

std::string_view to_string(ContactKind kind);

/// A point or maximal axis-parallel segment of shared boundary.
/// Points have a == b and length 0; segments have a < b lexicographically.
struct ContactComponent {
  ContactKind kind = ContactKind::point;
  Point a;
  Point b;
  Int length = 0;

  friend auto operator<=>(const ContactComponent&, const ContactComponent&) = default;

  ContactComponent translated(Vec2 v) const { return {kind, a + v, b + v, length}; }
};

/// Open-rectangle intersection test.
bool interiors_overlap(const Rect& a, const Rect& b) noexcept;

/// True iff the closed rectangles share at least one point.
bool closed_intersect(const Rect& a, const Rect& b) noexcept;

/// The closed intersection of two interior-disjoint rects as a point or segment.
/// Throws ContractViolation if the interiors overlap.
std::optional<ContactComponent> closed_contact(const Rect& a, const Rect& b);

/// Rects sorted by x0 for window queries. Holds a copy of the input; indices
/// returned by queries refer to positions in the original input order.
class RectIndex {
public:
  explicit RectIndex(std::span<const Rect> rects);

  /// Calls fn(index) for every rect whose closed extent meets the closed query
  /// rect. Order is by ascending x0, ties by original index.
  template <typename Fn>
  void for_each_closed_hit(const Rect& query, Fn&& fn) const {
    auto it = first_candidate(query);
    for (; it != sorted_.end() && it->rect.x0() <= query.x1(); ++it) {
      if (closed_intersect(it->rect, query)) {
        fn(it->index);
      }
    }
  }

  std::size_t size() const noexcept { return sorted_.size(); }

private:
  struct Entry {
    Rect rect;
    std::size_t index;
  };

  std::vector<Entry>::const_iterator first_candidate(const Rect& query) const;

  std::vector<Entry> sorted_;
  Int max_width_ = 0;
};

/// True iff no rect of a has an interior overlap with any rect of b.
bool union_interiors_disjoint(std::span<const Rect> a, std::span<const Rect> b);

/// Maximal contact components between two interior-disjoint rect unions,
/// sorted by (kind, a, b). Collinear segments sharing a point are merged and
/// points lying on a segment are absorbed. Throws ContractViolation if any
/// interiors overlap.
std::vector<ContactComponent> contact_components(std::span<const Rect> a, std::span<const Rect> b);

/// Sum of segment lengths; points contribute nothing.
Int total_segment_length(std::span<const ContactComponent> components);

/// Same rects, each translated by v.
std::vector<Rect> translated(std::span<const Rect> rects, Vec2 v);

} // namespace tkiss
