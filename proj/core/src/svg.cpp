#include "tkiss/svg.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <string_view>
#include <vector>

namespace tkiss {

namespace {

// A_0 gets the first entry; A_1..A_n cycle through the rest.
constexpr std::string_view kBaseFill = "#4d4d4d";
constexpr std::array<std::string_view, 8> kPalette = {
    "#e6a23c", "#4c9be8", "#67c23a", "#d9534f", "#9b59b6", "#1abc9c", "#f06292", "#8d6e63",
};

std::string_view fill_for(Int translate) {
  if (translate == 0) {
    return kBaseFill;
  }
  return kPalette[static_cast<std::size_t>((translate - 1) % static_cast<Int>(kPalette.size()))];
}

struct Group {
  std::string id;
  std::string_view fill;
  std::vector<Rect> rects;
};

std::string render(const std::vector<Group>& groups, Int unit_px, std::string_view title) {
  if (unit_px < 1) {
    throw ParameterError("unit_px must be >= 1, got " + std::to_string(unit_px));
  }
  Int x0 = groups.front().rects.front().x0(), x1 = groups.front().rects.front().x1();
  Int y0 = groups.front().rects.front().y0(), y1 = groups.front().rects.front().y1();
  for (const auto& g : groups) {
    for (const Rect& r : g.rects) {
      x0 = std::min(x0, r.x0());
      x1 = std::max(x1, r.x1());
      y0 = std::min(y0, r.y0());
      y1 = std::max(y1, r.y1());
    }
  }
  // Screen y grows downwards, so a point (x, y) lands at (x, -y).
  const Int vx = checked_mul(x0 - 1, unit_px);
  const Int vy = checked_mul(-(y1 + 1), unit_px);
  const Int vw = checked_mul(x1 - x0 + 2, unit_px);
  const Int vh = checked_mul(y1 - y0 + 2, unit_px);

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << vw << "\" height=\"" << vh
      << "\" viewBox=\"" << vx << ' ' << vy << ' ' << vw << ' ' << vh << "\">\n";
  out << "  <title>" << title << "</title>\n";
  for (const auto& g : groups) {
    out << "  <g id=\"" << g.id << "\" fill=\"" << g.fill
        << "\" stroke=\"#000000\" stroke-width=\"1\" stroke-linejoin=\"miter\">\n";
    for (const Rect& r : g.rects) {
      out << "    <rect x=\"" << checked_mul(r.x0(), unit_px) << "\" y=\"" << checked_mul(-r.y1(), unit_px)
          << "\" width=\"" << checked_mul(r.width(), unit_px) << "\" height=\""
          << checked_mul(r.height(), unit_px) << "\"/>\n";
    }
    out << "  </g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

} // namespace

std::string render_svg(const Scene& scene, Int unit_px) {
  std::vector<Group> groups;
  for (Int i = 0; i < static_cast<Int>(scene.offsets().size()); ++i) {
    groups.push_back({"A" + std::to_string(i), fill_for(i), scene.translate_rects(i)});
  }
  return render(groups, unit_px,
                "translates of D_" + std::to_string(scene.n()) + "^" + std::to_string(scene.m()));
}

std::string render_svg(const Shape& shape, Int unit_px) {
  std::vector<Group> groups{{"D", kPalette[1], shape.rects()}};
  return render(groups, unit_px, "D_" + std::to_string(shape.n()) + "^" + std::to_string(shape.m()));
}

} // namespace tkiss
