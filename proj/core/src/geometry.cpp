#include "tkiss/geometry.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace tkiss {

Rect::Rect(Int x0, Int x1, Int y0, Int y1) : x0_(x0), x1_(x1), y0_(y0), y1_(y1) {
  if (!(x0 < x1) || !(y0 < y1)) {
    throw InvariantViolation("degenerate rect [" + std::to_string(x0) + "," + std::to_string(x1) +
                             "]x[" + std::to_string(y0) + "," + std::to_string(y1) + "]");
  }
}

Rect Rect::translated(Vec2 v) const {
  return Rect(checked_add(x0_, v.dx), checked_add(x1_, v.dx), checked_add(y0_, v.dy),
              checked_add(y1_, v.dy));
}

std::string to_string(const Rect& r) {
  return "[" + std::to_string(r.x0()) + "," + std::to_string(r.x1()) + "]x[" +
         std::to_string(r.y0()) + "," + std::to_string(r.y1()) + "]";
}

std::string_view to_string(ContactKind kind) {
  switch (kind) {
  case ContactKind::point:
    return "point";
  case ContactKind::horizontal_segment:
    return "horizontal-segment";
  case ContactKind::vertical_segment:
    return "vertical-segment";
  }
  return "unknown";
}

bool interiors_overlap(const Rect& a, const Rect& b) noexcept {
  return std::max(a.x0(), b.x0()) < std::min(a.x1(), b.x1()) &&
         std::max(a.y0(), b.y0()) < std::min(a.y1(), b.y1());
}

bool closed_intersect(const Rect& a, const Rect& b) noexcept {
  return std::max(a.x0(), b.x0()) <= std::min(a.x1(), b.x1()) &&
         std::max(a.y0(), b.y0()) <= std::min(a.y1(), b.y1());
}

std::optional<ContactComponent> closed_contact(const Rect& a, const Rect& b) {
  if (interiors_overlap(a, b)) {
    throw ContractViolation("closed_contact: interiors of " + to_string(a) + " and " +
                            to_string(b) + " overlap");
  }
  const Int lx = std::max(a.x0(), b.x0());
  const Int hx = std::min(a.x1(), b.x1());
  const Int ly = std::max(a.y0(), b.y0());
  const Int hy = std::min(a.y1(), b.y1());
  if (lx > hx || ly > hy) {
    return std::nullopt;
  }
  // With disjoint interiors at least one extent is degenerate.
  if (lx == hx && ly == hy) {
    return ContactComponent{ContactKind::point, {lx, ly}, {lx, ly}, 0};
  }
  if (ly == hy) {
    return ContactComponent{ContactKind::horizontal_segment, {lx, ly}, {hx, ly}, hx - lx};
  }
  return ContactComponent{ContactKind::vertical_segment, {lx, ly}, {lx, hy}, hy - ly};
}

RectIndex::RectIndex(std::span<const Rect> rects) {
  sorted_.reserve(rects.size());
  for (std::size_t i = 0; i < rects.size(); ++i) {
    sorted_.push_back({rects[i], i});
    max_width_ = std::max(max_width_, rects[i].width());
  }
  std::sort(sorted_.begin(), sorted_.end(), [](const Entry& l, const Entry& r) {
    return std::pair(l.rect.x0(), l.index) < std::pair(r.rect.x0(), r.index);
  });
}

std::vector<RectIndex::Entry>::const_iterator RectIndex::first_candidate(const Rect& query) const {
  // Any rect reaching x >= query.x0 starts at or after query.x0 - max_width.
  const Int lo = checked_sub(query.x0(), max_width_);
  return std::lower_bound(sorted_.begin(), sorted_.end(), lo,
                          [](const Entry& e, Int x) { return e.rect.x0() < x; });
}

bool union_interiors_disjoint(std::span<const Rect> a, std::span<const Rect> b) {
  if (a.empty() || b.empty()) {
    return true;
  }
  // Index the larger side.
  const bool index_b = b.size() >= a.size();
  const RectIndex index(index_b ? b : a);
  const auto queries = index_b ? a : b;
  const auto indexed = index_b ? b : a;
  for (const Rect& q : queries) {
    bool overlap = false;
    index.for_each_closed_hit(q, [&](std::size_t j) {
      overlap = overlap || interiors_overlap(q, indexed[j]);
    });
    if (overlap) {
      return false;
    }
  }
  return true;
}

namespace {

struct Interval {
  Int lo;
  Int hi;
};

// Merge closed intervals that share at least a point.
std::vector<Interval> merge_intervals(std::vector<Interval> v) {
  std::sort(v.begin(), v.end(), [](Interval l, Interval r) { return std::pair(l.lo, l.hi) < std::pair(r.lo, r.hi); });
  std::vector<Interval> out;
  for (const Interval& iv : v) {
    if (!out.empty() && iv.lo <= out.back().hi) {
      out.back().hi = std::max(out.back().hi, iv.hi);
    } else {
      out.push_back(iv);
    }
  }
  return out;
}

bool on_interval_list(const std::map<Int, std::vector<Interval>>& lines, Int line, Int t) {
  auto it = lines.find(line);
  if (it == lines.end()) {
    return false;
  }
  const auto& ivs = it->second;
  auto pos = std::upper_bound(ivs.begin(), ivs.end(), t, [](Int v, const Interval& iv) { return v < iv.lo; });
  return pos != ivs.begin() && std::prev(pos)->hi >= t;
}

} // namespace

std::vector<ContactComponent> contact_components(std::span<const Rect> a, std::span<const Rect> b) {
  // Horizontal segments keyed by y, vertical by x.
  std::map<Int, std::vector<Interval>> horizontal;
  std::map<Int, std::vector<Interval>> vertical;
  std::vector<Point> points;

  if (!a.empty() && !b.empty()) {
    const RectIndex index(b);
    for (const Rect& q : a) {
      index.for_each_closed_hit(q, [&](std::size_t j) {
        const auto c = closed_contact(q, b[j]);
        if (!c) {
          return;
        }
        switch (c->kind) {
        case ContactKind::point:
          points.push_back(c->a);
          break;
        case ContactKind::horizontal_segment:
          horizontal[c->a.y].push_back({c->a.x, c->b.x});
          break;
        case ContactKind::vertical_segment:
          vertical[c->a.x].push_back({c->a.y, c->b.y});
          break;
        }
      });
    }
  }

  for (auto& [line, ivs] : horizontal) {
    ivs = merge_intervals(std::move(ivs));
  }
  for (auto& [line, ivs] : vertical) {
    ivs = merge_intervals(std::move(ivs));
  }

  std::vector<ContactComponent> out;
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  for (const Point& p : points) {
    if (!on_interval_list(horizontal, p.y, p.x) && !on_interval_list(vertical, p.x, p.y)) {
      out.push_back({ContactKind::point, p, p, 0});
    }
  }
  for (const auto& [y, ivs] : horizontal) {
    for (const Interval& iv : ivs) {
      out.push_back({ContactKind::horizontal_segment, {iv.lo, y}, {iv.hi, y}, iv.hi - iv.lo});
    }
  }
  for (const auto& [x, ivs] : vertical) {
    for (const Interval& iv : ivs) {
      out.push_back({ContactKind::vertical_segment, {x, iv.lo}, {x, iv.hi}, iv.hi - iv.lo});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Int total_segment_length(std::span<const ContactComponent> components) {
  Int total = 0;
  for (const auto& c : components) {
    total = checked_add(total, c.length);
  }
  return total;
}

std::vector<Rect> translated(std::span<const Rect> rects, Vec2 v) {
  std::vector<Rect> out;
  out.reserve(rects.size());
  for (const Rect& r : rects) {
    out.push_back(r.translated(v));
  }
  return out;
}

} // namespace tkiss
