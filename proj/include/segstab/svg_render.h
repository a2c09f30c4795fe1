#pragma once

#include <string>
#include <vector>

#include "segstab/instance.h"

namespace segstab {

/// Renders the instance, its capsule outlines, the solution points and
/// their radius-r disks into a 1000x1000 SVG document.
std::string render_svg(const PlaneGraphInstance& inst,
                       const std::vector<Point>& solution_points);

}  // namespace segstab
