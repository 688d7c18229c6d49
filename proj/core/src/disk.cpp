#include "tkiss/disk.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "tkiss/ruler.hpp"

namespace tkiss {

std::string_view to_string(PieceRole role) {
  return role == PieceRole::bar ? "bar" : "connector";
}

std::string to_string(const Piece& p) {
  return std::string(p.role == PieceRole::bar ? "B" : "V") + std::to_string(p.index) + " " +
         to_string(p.rect);
}

Shape::Shape(Int m, Int n, std::vector<Piece> pieces) : m_(m), n_(n), pieces_(std::move(pieces)) {
  if (m < 2 || n < 0 || n > kMaxDepth) {
    throw ParameterError("shape parameters out of range: m=" + std::to_string(m) +
                         " n=" + std::to_string(n));
  }
  if (static_cast<Int>(pieces_.size()) != pow2(n + 1) - 1) {
    throw InvariantViolation("shape with n=" + std::to_string(n) + " needs " +
                             std::to_string(pow2(n + 1) - 1) + " pieces, got " +
                             std::to_string(pieces_.size()));
  }
  for (std::size_t k = 0; k < pieces_.size(); ++k) {
    const Piece& p = pieces_[k];
    const PieceRole role = k % 2 == 0 ? PieceRole::bar : PieceRole::connector;
    const Int index = static_cast<Int>(k / 2) + 1;
    if (p.role != role || p.index != index) {
      throw InvariantViolation("piece " + std::to_string(k) + " should be " +
                               std::string(role == PieceRole::bar ? "B" : "V") +
                               std::to_string(index) + ", got " + to_string(p));
    }
    if (role == PieceRole::bar && (p.rect.width() != m || p.rect.height() != 1)) {
      throw InvariantViolation("bar must be " + std::to_string(m) + "x1: " + to_string(p));
    }
    if (role == PieceRole::connector && (p.rect.width() != 1 || p.rect.height() != ruler(index))) {
      throw InvariantViolation("connector must be 1x" + std::to_string(ruler(index)) + ": " +
                               to_string(p));
    }
  }
}

const Rect& Shape::bar(Int i) const {
  if (i < 1 || i > bar_count()) {
    throw ParameterError("bar index " + std::to_string(i) + " out of range");
  }
  return pieces_[static_cast<std::size_t>(2 * (i - 1))].rect;
}

const Rect& Shape::connector(Int i) const {
  if (i < 1 || i >= bar_count()) {
    throw ParameterError("connector index " + std::to_string(i) + " out of range");
  }
  return pieces_[static_cast<std::size_t>(2 * i - 1)].rect;
}

std::vector<Rect> Shape::rects() const {
  std::vector<Rect> out;
  out.reserve(pieces_.size());
  for (const Piece& p : pieces_) {
    out.push_back(p.rect);
  }
  return out;
}

std::vector<Rect> Shape::rects(Vec2 offset) const {
  std::vector<Rect> out;
  out.reserve(pieces_.size());
  for (const Piece& p : pieces_) {
    out.push_back(p.rect.translated(offset));
  }
  return out;
}

Rect Shape::bounding_box() const {
  Int x0 = pieces_.front().rect.x0(), x1 = pieces_.front().rect.x1();
  Int y0 = pieces_.front().rect.y0(), y1 = pieces_.front().rect.y1();
  for (const Piece& p : pieces_) {
    x0 = std::min(x0, p.rect.x0());
    x1 = std::max(x1, p.rect.x1());
    y0 = std::min(y0, p.rect.y0());
    y1 = std::max(y1, p.rect.y1());
  }
  return Rect(x0, x1, y0, y1);
}

namespace {

// Disk of any depth >= 0, the shared body of build_disk and level-0 references.
Shape make_disk(Int m, Int n) {
  if (m < 2 || n < 0 || n > kMaxDepth) {
    throw ParameterError("disk parameters out of range: m=" + std::to_string(m) +
                         " n=" + std::to_string(n) + " (need m >= 2, 0 <= n <= " +
                         std::to_string(kMaxDepth) + ")");
  }
  const Int bars = pow2(n);
  std::vector<Piece> pieces;
  pieces.reserve(static_cast<std::size_t>(2 * bars - 1));
  Int y = 0; // y_i
  for (Int i = 1; i <= bars; ++i) {
    const Int right = checked_mul(i, m);
    pieces.push_back({PieceRole::bar, i, Rect(right - m, right, y, y + 1)});
    if (i == bars) {
      break;
    }
    const Int next_y = checked_add(y, ruler(i));
    pieces.push_back({PieceRole::connector, i, Rect(right - 1, right, y + 1, next_y + 1)});
    y = next_y;
  }
  return Shape(m, n, std::move(pieces));
}

void require_ref(Int n, SubCopyRef ref) {
  if (ref.level < 0 || ref.level > n) {
    throw ParameterError("sub-copy level " + std::to_string(ref.level) + " outside [0, " +
                         std::to_string(n) + "]");
  }
  if (ref.copy < 1 || ref.copy > pow2(n - ref.level)) {
    throw ParameterError("sub-copy " + std::to_string(ref.copy) + " outside [1, " +
                         std::to_string(pow2(n - ref.level)) + "] at level " +
                         std::to_string(ref.level));
  }
}

} // namespace

Shape build_disk(Int m, Int n) {
  if (n < 1) {
    throw ParameterError("build_disk: n must be >= 1, got " + std::to_string(n));
  }
  return make_disk(m, n);
}

Vec2 sub_copy_offset(Int m, Int n, SubCopyRef ref) {
  if (m < 2 || n < 0 || n > kMaxDepth) {
    throw ParameterError("sub_copy_offset: m=" + std::to_string(m) + " n=" + std::to_string(n));
  }
  require_ref(n, ref);
  const Int bars_before = checked_mul(ref.copy - 1, pow2(ref.level));
  return {checked_mul(bars_before, m), ruler_sum(bars_before)};
}

Shape extract_sub_copy(const Shape& shape, SubCopyRef ref) {
  require_ref(shape.n(), ref);
  const Vec2 origin = sub_copy_offset(shape.m(), shape.n(), ref);
  const Vec2 back{-origin.dx, -origin.dy};
  const Int width = pow2(ref.level);
  const Int first_bar = (ref.copy - 1) * width + 1;

  std::vector<Piece> pieces;
  pieces.reserve(static_cast<std::size_t>(2 * width - 1));
  for (Int k = 0; k < width; ++k) {
    pieces.push_back({PieceRole::bar, k + 1, shape.bar(first_bar + k).translated(back)});
    if (k + 1 < width) {
      pieces.push_back({PieceRole::connector, k + 1, shape.connector(first_bar + k).translated(back)});
    }
  }
  return Shape(shape.m(), ref.level, std::move(pieces));
}

std::vector<std::string> shape_violations(const Shape& shape) {
  std::vector<std::string> out;
  const Int n = shape.n();
  const Int m = shape.m();
  const auto& pieces = shape.pieces();

  const Rect bbox = shape.bounding_box();
  const Rect expected(0, checked_mul(pow2(n), m), 0, pow2(n + 1) - n - 1);
  if (bbox != expected) {
    out.push_back("bounding box " + to_string(bbox) + ", expected " + to_string(expected));
  }

  // Adjacency edges between piece positions, found through the x-sorted index.
  const std::vector<Rect> rects = shape.rects();
  const RectIndex index(rects);
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t p = 0; p < rects.size(); ++p) {
    index.for_each_closed_hit(rects[p], [&](std::size_t q) {
      if (q <= p) {
        return;
      }
      if (interiors_overlap(rects[p], rects[q])) {
        out.push_back("interiors overlap: " + to_string(pieces[p]) + " and " + to_string(pieces[q]));
        return;
      }
      const auto c = closed_contact(rects[p], rects[q]);
      if (!c || c->length == 0) {
        return;
      }
      if (q != p + 1) {
        out.push_back("unexpected adjacency: " + to_string(pieces[p]) + " and " + to_string(pieces[q]));
      } else if (c->length != 1) {
        out.push_back("shared edge of length " + std::to_string(c->length) + " between " +
                      to_string(pieces[p]) + " and " + to_string(pieces[q]));
      }
      edges.emplace(p, q);
    });
  }
  for (std::size_t p = 0; p + 1 < rects.size(); ++p) {
    if (!edges.contains({p, p + 1})) {
      out.push_back("missing adjacency: " + to_string(pieces[p]) + " and " + to_string(pieces[p + 1]));
    }
  }
  return out;
}

} // namespace tkiss
