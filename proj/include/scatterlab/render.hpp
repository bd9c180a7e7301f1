#pragma once

#include "scatterlab/families.hpp"

#include <string>

namespace scatterlab {

/// Static SVG. Terms are drawn at the given enumeration depth with ellipsis
/// markers where the enumeration stopped; planar box unions, cube families
/// and frames are drawn to scale. Throws Error(not_supported) above two
/// dimensions.
std::string render_svg(const Built& value, int depth);

}  // namespace scatterlab
