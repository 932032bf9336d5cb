#pragma once

#include <optional>
#include <string>

#include "ordinary/finder.hpp"

namespace ordinary {

struct PlotWindow {
    double x0 = -10, y0 = -10, x1 = 10, y1 = 10;
};

// Deterministic SVG of the point set in the affine chart z = 1; certificate
// points are highlighted and the curve is traced by sign-change contouring of
// the dehomogenized polynomial on a raster grid. The one place floating point
// is allowed.
std::string emit_plot(const PointSet& A, const std::optional<Certificate>& cert,
                      const PlotWindow& window);

} // namespace ordinary
