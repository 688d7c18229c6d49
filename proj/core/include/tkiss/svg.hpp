#pragma once

#include <string>

#include "tkiss/placement.hpp"

namespace tkiss {

inline constexpr Int kDefaultUnitPx = 10;

/// Renders every translate of the scene as its own <g>, A_0 in a distinct
/// colour. Coordinates are unit_px times the exact integer coordinates with
/// y pointing up on screen; the viewBox is the scene bounding box plus a
/// one-unit margin. Throws ParameterError for unit_px < 1.
std::string render_svg(const Scene& scene, Int unit_px = kDefaultUnitPx);

/// Renders a single disk at the origin.
std::string render_svg(const Shape& shape, Int unit_px = kDefaultUnitPx);

} // namespace tkiss
