#pragma once

#include <string>

#include "sge/certificate.hpp"

namespace sge {

enum class RenderFormat { svg, tikz };

// Draws the grid, the assigned paths as thick polylines, and S as filled
// circles, with row 1 at the bottom.  The output is byte-for-byte
// deterministic for a given certificate (integer coordinates only).
std::string render(const Certificate& c, RenderFormat format);

}  // namespace sge
