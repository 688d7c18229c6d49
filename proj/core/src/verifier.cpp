#include "tkiss/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <string>
#include <thread>

namespace tkiss {

namespace {

PairVerdict check_pair(Int i, Int j, std::span<const Rect> a, std::span<const Rect> b) {
  PairVerdict v;
  v.i = i;
  v.j = j;
  v.interiors_disjoint = union_interiors_disjoint(a, b);
  if (v.interiors_disjoint) {
    v.contacts = contact_components(a, b);
    v.segment_length_total = total_segment_length(v.contacts);
  }
  return v;
}

} // namespace

Certificate verify_scene(const Scene& scene, VerifyOptions options) {
  Certificate cert;
  cert.m = scene.m();
  cert.n = scene.n();
  cert.offsets = scene.offsets();

  const Int count = static_cast<Int>(scene.offsets().size());
  std::vector<std::vector<Rect>> translates;
  translates.reserve(static_cast<std::size_t>(count));
  for (Int i = 0; i < count; ++i) {
    translates.push_back(scene.translate_rects(i));
  }

  std::vector<std::pair<Int, Int>> pairs;
  for (Int i = 0; i < count; ++i) {
    for (Int j = i + 1; j < count; ++j) {
      pairs.emplace_back(i, j);
    }
  }
  cert.pair_verdicts.resize(pairs.size());

  // Each worker writes only its own slots, so the result is order-independent.
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k = next++; k < pairs.size(); k = next++) {
      const auto [i, j] = pairs[k];
      cert.pair_verdicts[k] = check_pair(i, j, translates[static_cast<std::size_t>(i)],
                                         translates[static_cast<std::size_t>(j)]);
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(pairs.size())));
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back(work);
    }
  }

  bool all_disjoint = true;
  for (const PairVerdict& v : cert.pair_verdicts) {
    all_disjoint = all_disjoint && v.interiors_disjoint;
    const bool qualifies = std::any_of(v.contacts.begin(), v.contacts.end(),
                                       [](const ContactComponent& c) { return c.length > 0; });
    if (v.i == 0 && qualifies) {
      ++cert.touching_count;
    }
  }
  cert.ok = all_disjoint && cert.touching_count == cert.n;
  return cert;
}

Certificate verify_construction(Int m, Int n, VerifyOptions options) {
  return verify_scene(place_translates(m, n), options);
}

std::vector<VerticalRun> vertical_runs(const Shape& shape) {
  // Column x covers [x, x+1]; every piece contributes its y-extent to the
  // columns it spans.
  std::map<Int, std::vector<std::pair<Int, Int>>> columns;
  for (const Piece& p : shape.pieces()) {
    for (Int x = p.rect.x0(); x < p.rect.x1(); ++x) {
      columns[x].emplace_back(p.rect.y0(), p.rect.y1());
    }
  }
  std::vector<VerticalRun> runs;
  for (auto& [x, spans] : columns) {
    std::sort(spans.begin(), spans.end());
    const std::size_t first = runs.size();
    for (const auto& [y0, y1] : spans) {
      if (runs.size() > first && y0 <= runs.back().y1) {
        runs.back().y1 = std::max(runs.back().y1, y1);
      } else {
        runs.push_back({x, y0, y1});
      }
    }
  }
  return runs;
}

TouchingReport verify_touching_heights(Int m, Int n, Int i) {
  require_construction_parameters(m, n);
  if (i < 1 || i > n) {
    throw ParameterError("touching index i=" + std::to_string(i) + " outside [1, " +
                         std::to_string(n) + "]");
  }
  const Scene scene = place_translates(m, n);
  const Shape& shape = scene.shape();
  const Int level = n + 1 - i;

  TouchingReport report;
  report.m = m;
  report.n = n;
  report.i = i;
  report.d_copy = {level, pow2(n - level)};
  report.d_origin = scene.offsets()[0] + sub_copy_offset(m, n, report.d_copy);
  report.d_prime_origin = scene.offsets()[static_cast<std::size_t>(i)];
  report.relative = report.d_prime_origin - report.d_origin;
  report.offset_ok = report.relative == Vec2{i - 1, n + 2 - i};

  const Shape d = extract_sub_copy(shape, report.d_copy);
  const auto runs = vertical_runs(d);
  const auto tallest = std::max_element(runs.begin(), runs.end(), [](const VerticalRun& l, const VerticalRun& r) {
    return l.height() < r.height();
  });
  report.tallest = *tallest;
  report.tallest_unique = std::count_if(runs.begin(), runs.end(), [&](const VerticalRun& r) {
                            return r.height() == tallest->height();
                          }) == 1;
  const Int middle = pow2(level - 1);
  report.tallest_on_middle_column = tallest->x == d.bar(middle).x1() - 1 &&
                                    tallest->y0 == d.bar(middle).y0() &&
                                    tallest->y1 == d.connector(middle).y1();
  report.tallest_height_ok = tallest->height() == n + 2 - i;

  const auto lower = d.rects(report.d_origin);
  const auto upper = d.rects(report.d_prime_origin);
  if (union_interiors_disjoint(lower, upper)) {
    report.contacts = contact_components(lower, upper);
  }
  report.has_segment = std::any_of(report.contacts.begin(), report.contacts.end(),
                                   [](const ContactComponent& c) { return c.length > 0; });
  return report;
}

} // namespace tkiss
