#include "doctest.h"

#include <regex>
#include <sstream>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "tkiss/svg.hpp"

using namespace tkiss;
namespace pt = boost::property_tree;

namespace {

pt::ptree parse_xml(const std::string& text) {
  std::istringstream in(text);
  pt::ptree tree;
  pt::read_xml(in, tree);
  return tree;
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) {
    ++n;
  }
  return n;
}

} // namespace

TEST_CASE("single shape") {
  const std::string svg = render_svg(build_disk(2, 1));
  CHECK(count(svg, "<rect ") == 3);
  CHECK_NOTHROW(parse_xml(svg));
  // B_1 = [0,2]x[0,1] lands at y = -1 after the flip.
  CHECK(svg.find("<rect x=\"0\" y=\"-10\" width=\"20\" height=\"10\"/>") != std::string::npos);
  // Bounding box [0,4]x[0,2] plus one unit each side.
  CHECK(svg.find("viewBox=\"-10 -30 60 40\"") != std::string::npos);
}

TEST_CASE("scene (4, 3)") {
  const Scene s = place_translates(4, 3);
  const std::string svg = render_svg(s);
  CHECK(count(svg, "<rect ") == 4 * 15);
  CHECK(count(svg, "<g ") == 4);
  CHECK(svg.find("<g id=\"A0\" fill=\"#4d4d4d\"") != std::string::npos);

  const auto tree = parse_xml(svg);
  std::size_t groups = 0;
  for (const auto& [name, child] : tree.get_child("svg")) {
    if (name == "g") {
      ++groups;
    }
  }
  CHECK(groups == 4);
}

TEST_CASE("coordinates are exact multiples of unit_px") {
  const Scene s = place_translates(5, 3);
  for (Int unit : {1, 7, 10}) {
    const std::string svg = render_svg(s, unit);
    CHECK_NOTHROW(parse_xml(svg));
    const std::regex rect_re(R"re(<rect x="(-?\d+)" y="(-?\d+)" width="(\d+)" height="(\d+)"/>)re");
    std::vector<Rect> drawn;
    for (auto it = std::sregex_iterator(svg.begin(), svg.end(), rect_re); it != std::sregex_iterator(); ++it) {
      const Int x = std::stoll((*it)[1]), y = std::stoll((*it)[2]);
      const Int w = std::stoll((*it)[3]), h = std::stoll((*it)[4]);
      REQUIRE(x % unit == 0);
      REQUIRE(y % unit == 0);
      REQUIRE(w % unit == 0);
      REQUIRE(h % unit == 0);
      drawn.push_back(Rect(x / unit, (x + w) / unit, -(y + h) / unit, -y / unit));
    }
    std::vector<Rect> expected;
    for (Int i = 0; i <= s.n(); ++i) {
      for (const Rect& r : s.translate_rects(i)) {
        expected.push_back(r);
      }
    }
    CHECK(drawn == expected);
  }
}

TEST_CASE("rendering is deterministic") {
  const Scene s = place_translates(6, 6);
  CHECK(render_svg(s) == render_svg(s));
  CHECK(render_svg(s, 3) == render_svg(place_translates(6, 6), 3));
}

TEST_CASE("unit_px must be positive") {
  CHECK_THROWS_AS(render_svg(build_disk(2, 1), 0), ParameterError);
}
