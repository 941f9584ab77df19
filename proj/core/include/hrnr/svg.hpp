#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hrnr/ranges.hpp"

namespace hrnr {

struct RankRegion {
    int k;
    ConvexRegion region;
    std::vector<Vec2> corner_points;
};

/// V-set marker: (l, point).
using VMarker = std::pair<int, cplx>;

/// Deterministic SVG document: nested rank regions darkest-innermost, corner
/// markers, an axis cross at the origin, optional boundary-curve polyline and
/// V-set markers. Fixed float formatting (9 significant digits) makes the
/// output byte-identical for identical inputs. Requires at least one region or
/// a nonempty curve.
std::string render_svg(const std::vector<RankRegion>& regions,
                       const std::vector<CurveSample>& curve,
                       const std::vector<VMarker>& vset_markers);

}  // namespace hrnr
