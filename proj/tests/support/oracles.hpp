#pragma once

// Brute-force reference computations for the tests. Nothing here calls into
// the library's algorithms beyond the plain data types.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "tkiss/geometry.hpp"

namespace tkiss::oracle {

/// Count binary digits from the right up to and including the first 1.
inline Int ruler_from_binary_string(Int i) {
  std::string bits;
  for (auto v = static_cast<std::uint64_t>(i); v != 0; v >>= 1) {
    bits.push_back(v & 1 ? '1' : '0'); // least significant first
  }
  return static_cast<Int>(bits.find('1')) + 1;
}

/// Rebuild the sequence from its self-similarity: starting from (1), the
/// sequence of length 2L has 1 at odd positions and s_k + 1 at position 2k.
inline std::vector<Int> ruler_by_reconstruction(std::size_t length) {
  std::vector<Int> seq{1};
  while (seq.size() < length) {
    std::vector<Int> next(seq.size() * 2);
    for (std::size_t k = 0; k < seq.size(); ++k) {
      next[2 * k] = 1;
      next[2 * k + 1] = seq[k] + 1;
    }
    seq = std::move(next);
  }
  seq.resize(length);
  return seq; // seq[i-1] == s_i
}

inline Int direct_sum(const std::vector<Int>& seq, Int from, Int to) {
  Int total = 0;
  for (Int i = from; i <= to; ++i) {
    total += seq[static_cast<std::size_t>(i - 1)];
  }
  return total;
}

inline bool naive_interiors_disjoint(const std::vector<Rect>& a, const std::vector<Rect>& b) {
  for (const Rect& p : a) {
    for (const Rect& q : b) {
      const bool x_open = std::max(p.x0(), q.x0()) < std::min(p.x1(), q.x1());
      const bool y_open = std::max(p.y0(), q.y0()) < std::min(p.y1(), q.y1());
      if (x_open && y_open) {
        return false;
      }
    }
  }
  return true;
}

/// Contact set decomposed to unit lattice edges plus isolated lattice points.
struct UnitContacts {
  std::set<std::pair<Int, Int>> horizontal; // edge (x, y)-(x+1, y)
  std::set<std::pair<Int, Int>> vertical;   // edge (x, y)-(x, y+1)
  std::set<std::pair<Int, Int>> points;     // not on any edge

  friend bool operator==(const UnitContacts&, const UnitContacts&) = default;
};

inline void drop_points_on_edges(UnitContacts& u) {
  std::erase_if(u.points, [&](const std::pair<Int, Int>& p) {
    const auto [x, y] = p;
    return u.horizontal.contains({x, y}) || u.horizontal.contains({x - 1, y}) ||
           u.vertical.contains({x, y}) || u.vertical.contains({x, y - 1});
  });
}

/// All-pairs closed intersections, no index, no merging.
inline UnitContacts naive_unit_contacts(const std::vector<Rect>& a, const std::vector<Rect>& b) {
  UnitContacts u;
  for (const Rect& p : a) {
    for (const Rect& q : b) {
      const Int lx = std::max(p.x0(), q.x0()), hx = std::min(p.x1(), q.x1());
      const Int ly = std::max(p.y0(), q.y0()), hy = std::min(p.y1(), q.y1());
      if (lx > hx || ly > hy) {
        continue;
      }
      if (lx == hx && ly == hy) {
        u.points.insert({lx, ly});
      } else if (ly == hy) {
        for (Int x = lx; x < hx; ++x) {
          u.horizontal.insert({x, ly});
        }
      } else {
        for (Int y = ly; y < hy; ++y) {
          u.vertical.insert({lx, y});
        }
      }
    }
  }
  drop_points_on_edges(u);
  return u;
}

inline UnitContacts decompose(const std::vector<ContactComponent>& components) {
  UnitContacts u;
  for (const auto& c : components) {
    switch (c.kind) {
    case ContactKind::point:
      u.points.insert({c.a.x, c.a.y});
      break;
    case ContactKind::horizontal_segment:
      for (Int x = c.a.x; x < c.b.x; ++x) {
        u.horizontal.insert({x, c.a.y});
      }
      break;
    case ContactKind::vertical_segment:
      for (Int y = c.a.y; y < c.b.y; ++y) {
        u.vertical.insert({c.a.x, y});
      }
      break;
    }
  }
  return u;
}

/// True iff no two collinear segments of the list share a point.
inline bool segments_maximal(const std::vector<ContactComponent>& components) {
  for (std::size_t i = 0; i < components.size(); ++i) {
    for (std::size_t j = i + 1; j < components.size(); ++j) {
      const auto& p = components[i];
      const auto& q = components[j];
      if (p.kind != q.kind || p.kind == ContactKind::point) {
        continue;
      }
      if (p.kind == ContactKind::horizontal_segment && p.a.y == q.a.y &&
          std::max(p.a.x, q.a.x) <= std::min(p.b.x, q.b.x)) {
        return false;
      }
      if (p.kind == ContactKind::vertical_segment && p.a.x == q.a.x &&
          std::max(p.a.y, q.a.y) <= std::min(p.b.y, q.b.y)) {
        return false;
      }
    }
  }
  return true;
}

/// Is segment (a, b) covered by one reported component?
inline bool covered_by(const std::vector<ContactComponent>& components, Point a, Point b) {
  return std::any_of(components.begin(), components.end(), [&](const ContactComponent& c) {
    if (a.y == b.y) {
      return c.kind == ContactKind::horizontal_segment && c.a.y == a.y && c.a.x <= a.x && b.x <= c.b.x;
    }
    return c.kind == ContactKind::vertical_segment && c.a.x == a.x && c.a.y <= a.y && b.y <= c.b.y;
  });
}

/// Random rect within [0, span)^2 with sides up to max_side.
inline Rect random_rect(std::mt19937_64& rng, Int span, Int max_side) {
  std::uniform_int_distribution<Int> pos(0, span - 1);
  std::uniform_int_distribution<Int> side(1, max_side);
  const Int x = pos(rng), y = pos(rng);
  return Rect(x, x + side(rng), y, y + side(rng));
}

/// Two random rect lists whose interiors never overlap across lists.
inline std::pair<std::vector<Rect>, std::vector<Rect>> random_disjoint_pair(std::mt19937_64& rng, int count,
                                                                              Int span, Int max_side) {
  std::vector<Rect> a, b;
  for (int k = 0; k < count; ++k) {
    a.push_back(random_rect(rng, span, max_side));
  }
  for (int tries = 0; tries < 20 * count && static_cast<int>(b.size()) < count; ++tries) {
    const Rect cand = random_rect(rng, span, max_side);
    if (naive_interiors_disjoint({cand}, a)) {
      b.push_back(cand);
    }
  }
  return {a, b};
}

} // namespace tkiss::oracle
