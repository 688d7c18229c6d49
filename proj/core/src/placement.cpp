#include "tkiss/placement.hpp"

#include <string>

#include "tkiss/ruler.hpp"

namespace tkiss {

Scene::Scene(std::shared_ptr<const Shape> shape, std::vector<Vec2> offsets)
    : shape_(std::move(shape)), offsets_(std::move(offsets)) {
  if (!shape_) {
    throw InvariantViolation("scene without a shape");
  }
  const Int n = shape_->n();
  if (static_cast<Int>(offsets_.size()) != n + 1) {
    throw InvariantViolation("scene needs " + std::to_string(n + 1) + " offsets, got " +
                             std::to_string(offsets_.size()));
  }
  if (offsets_[1] != Vec2{0, 0}) {
    throw InvariantViolation("scene offset t_1 must be (0,0)");
  }
  if (offsets_[0] != Vec2{0, -(n + 1)}) {
    throw InvariantViolation("scene offset t_0 must be (0," + std::to_string(-(n + 1)) + ")");
  }
  for (std::size_t i = 2; i < offsets_.size(); ++i) {
    if (offsets_[i].dx <= offsets_[i - 1].dx) {
      throw InvariantViolation("scene x offsets must increase from t_1 to t_n");
    }
  }
}

std::vector<Rect> Scene::translate_rects(Int i) const {
  if (i < 0 || i >= static_cast<Int>(offsets_.size())) {
    throw ParameterError("translate index " + std::to_string(i) + " out of range");
  }
  return shape_->rects(offsets_[static_cast<std::size_t>(i)]);
}

void require_construction_parameters(Int m, Int n) {
  if (n < 2 || m < n || n > kMaxDepth) {
    throw ParameterError("construction needs n >= 2 and m >= n (n <= " + std::to_string(kMaxDepth) +
                         "), got m=" + std::to_string(m) + " n=" + std::to_string(n));
  }
}

std::vector<Vec2> translate_offsets(Int m, Int n) {
  require_construction_parameters(m, n);
  std::vector<Vec2> t(static_cast<std::size_t>(n + 1));
  t[0] = {0, -(n + 1)};
  t[1] = {0, 0};
  for (Int i = 2; i <= n; ++i) {
    const Vec2 second_copy = sub_copy_offset(m, n, {n + 1 - i, 2});
    t[static_cast<std::size_t>(i)] = t[static_cast<std::size_t>(i - 1)] + second_copy + Vec2{1, -1};
  }
  return t;
}

Scene place_translates(Int m, Int n) {
  auto offsets = translate_offsets(m, n);
  return Scene(std::make_shared<const Shape>(build_disk(m, n)), std::move(offsets));
}

void validate(const Lemma2Case& c) {
  if (c.m < 2 || c.n < 2 || c.n > kMaxDepth) {
    throw ParameterError("lemma2 case needs m, n >= 2");
  }
  if (c.r < 1 || c.r > pow2(c.n)) {
    throw ParameterError("lemma2 case bar index r=" + std::to_string(c.r) + " outside [1, 2^n]");
  }
  if (c.xstar < 1 || c.xstar > c.m - 1) {
    throw ParameterError("lemma2 case xstar=" + std::to_string(c.xstar) + " outside [1, m-1]");
  }
  if (c.ystar < 1) {
    throw ParameterError("lemma2 case ystar=" + std::to_string(c.ystar) + " must be >= 1");
  }
}

Vec2 lemma2_offset(const Lemma2Case& c) {
  validate(c);
  const Int bar_y = ruler_sum(c.r - 1);
  return {checked_add(checked_mul(c.r - 1, c.m), c.xstar), checked_sub(bar_y, c.ystar)};
}

std::pair<std::vector<Rect>, std::vector<Rect>> lemma2_instance(const Lemma2Case& c) {
  const Vec2 offset = lemma2_offset(c);
  const Shape shape = build_disk(c.m, c.n);
  return {shape.rects(), shape.rects(offset)};
}

Int lemma2_case_count(Int m, Int n) {
  validate({m, n, 1, 1, 1});
  const Int height = build_disk(m, n).height();
  return checked_mul(checked_mul(pow2(n), m - 1), height + 1);
}

std::optional<Lemma2Case> find_lemma2_violation(Int m, Int n) {
  validate({m, n, 1, 1, 1});
  const Shape shape = build_disk(m, n);
  const std::vector<Rect> base = shape.rects();
  const Int height = shape.height();
  for (Int r = 1; r <= shape.bar_count(); ++r) {
    for (Int xstar = 1; xstar <= m - 1; ++xstar) {
      for (Int ystar = 1; ystar <= height + 1; ++ystar) {
        const Lemma2Case c{m, n, r, xstar, ystar};
        if (!union_interiors_disjoint(base, shape.rects(lemma2_offset(c)))) {
          return c;
        }
      }
    }
  }
  return std::nullopt;
}

PairWitness theorem_pair_witness(Int m, Int n, Int i, Int j) {
  if (!(1 <= i && i < j && j <= n)) {
    throw ParameterError("pair witness needs 1 <= i < j <= n, got i=" + std::to_string(i) +
                         " j=" + std::to_string(j));
  }
  const auto t = translate_offsets(m, n);
  const Int d = j - i;
  const Vec2 target = t[static_cast<std::size_t>(j)] - t[static_cast<std::size_t>(i)] - Vec2{d, -d};
  const Int level = n + 1 - j;
  const Int stride = checked_mul(pow2(level), m);

  auto broken = [&](const std::string& why) {
    return ConstructionError("no copy of level " + std::to_string(level) + " in A_" +
                             std::to_string(i) + " explains A_" + std::to_string(j) + ": " + why);
  };
  if (target.dx < 0 || target.dx % stride != 0) {
    throw broken("x offset " + std::to_string(target.dx) + " is not a copy boundary");
  }
  const SubCopyRef ref{level, target.dx / stride + 1};
  if (ref.copy > pow2(n - level) || sub_copy_offset(m, n, ref) != target) {
    throw broken("offset (" + std::to_string(target.dx) + "," + std::to_string(target.dy) +
                 ") matches no copy");
  }

  PairWitness w{i, j, ref, (ref.copy - 1) * pow2(level) + 1, d, d};
  // The first bar of A_j must be bar B_r of A_i moved right and down by d.
  const Shape shape = build_disk(m, n);
  const Rect first = shape.bar(1).translated(t[static_cast<std::size_t>(j)]);
  const Rect shifted = shape.bar(w.r).translated(t[static_cast<std::size_t>(i)] + Vec2{d, -d});
  if (first != shifted) {
    throw broken("bar B_" + std::to_string(w.r) + " does not line up");
  }
  if (w.xstar > m - 1) {
    throw broken("shift " + std::to_string(d) + " exceeds m - 1");
  }
  return w;
}

} // namespace tkiss
