#pragma once

#include <string>

#include "linkstar/construct.hpp"

namespace linkstar {

// SVG drawing of a construction: one palette color per class C_i, labeled
// polygon vertices, and markers for the midpoints c_i and path endpoints e_i.
std::string render_svg(const Construction& c);

}  // namespace linkstar
