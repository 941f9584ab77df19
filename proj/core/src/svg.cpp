#include "hrnr/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "hrnr/errors.hpp"

namespace hrnr {

namespace {

// fixed formatting so identical inputs produce identical bytes
std::string fmt9(double v) {
    if (v == 0.0) v = 0.0;  // normalize -0
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

struct Mapper {
    double minx, maxy, scale;
    double px(double x) const { return 20.0 + (x - minx) * scale; }
    double py(double y) const { return 20.0 + (maxy - y) * scale; }
};

const char* kVsetPalette[4] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#9467bd"};

}  // namespace

std::string render_svg(const std::vector<RankRegion>& regions,
                       const std::vector<CurveSample>& curve,
                       const std::vector<VMarker>& vset_markers) {
    bool any_region = false;
    for (const RankRegion& r : regions)
        if (r.region.classification != RegionKind::empty) any_region = true;
    if (!any_region && curve.empty())
        throw InputError("render_svg: nothing to draw (no regions, no curve)");

    double minx = std::numeric_limits<double>::infinity(), maxx = -minx;
    double miny = minx, maxy = -minx;
    auto grow = [&](double x, double y) {
        minx = std::min(minx, x);
        maxx = std::max(maxx, x);
        miny = std::min(miny, y);
        maxy = std::max(maxy, y);
    };
    grow(0.0, 0.0);  // keep the axis cross in frame
    for (const RankRegion& r : regions) {
        for (const Vec2& v : r.region.vertices) grow(v.x, v.y);
        for (const Vec2& v : r.corner_points) grow(v.x, v.y);
    }
    for (const CurveSample& c : curve) grow(c.point.real(), c.point.imag());
    for (const VMarker& m : vset_markers) grow(m.second.real(), m.second.imag());

    const double half = 0.5 * std::max({maxx - minx, maxy - miny, 1e-6}) * 1.08;
    const double cx = 0.5 * (minx + maxx);
    const double cy = 0.5 * (miny + maxy);
    const Mapper map{cx - half, cy + half, 600.0 / (2.0 * half)};

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 640 640\" "
           "width=\"640\" height=\"640\">\n";
    svg << "<rect x=\"0\" y=\"0\" width=\"640\" height=\"640\" fill=\"#ffffff\"/>\n";

    // axis cross at the origin
    svg << "<line x1=\"" << fmt9(map.px(cx - half)) << "\" y1=\"" << fmt9(map.py(0.0))
        << "\" x2=\"" << fmt9(map.px(cx + half)) << "\" y2=\"" << fmt9(map.py(0.0))
        << "\" stroke=\"#888888\" stroke-width=\"1\"/>\n";
    svg << "<line x1=\"" << fmt9(map.px(0.0)) << "\" y1=\"" << fmt9(map.py(cy - half))
        << "\" x2=\"" << fmt9(map.px(0.0)) << "\" y2=\"" << fmt9(map.py(cy + half))
        << "\" stroke=\"#888888\" stroke-width=\"1\"/>\n";

    // regions ascending k: later (inner) ones drawn on top, darker
    std::vector<const RankRegion*> sorted;
    for (const RankRegion& r : regions) sorted.push_back(&r);
    std::sort(sorted.begin(), sorted.end(),
              [](const RankRegion* a, const RankRegion* b) { return a->k < b->k; });
    const std::size_t shades = std::max<std::size_t>(sorted.size(), 1);
    std::size_t drawn = 0;
    for (const RankRegion* rp : sorted) {
        const ConvexRegion& r = rp->region;
        ++drawn;
        const int g = 215 - int(155.0 * double(drawn) / double(shades));
        char fill[8];
        std::snprintf(fill, sizeof(fill), "#%02x%02x%02x", g, g, g);
        if (r.classification == RegionKind::full && r.vertices.size() >= 3) {
            svg << "<polygon points=\"";
            for (std::size_t i = 0; i < r.vertices.size(); ++i) {
                if (i) svg << " ";
                svg << fmt9(map.px(r.vertices[i].x)) << "," << fmt9(map.py(r.vertices[i].y));
            }
            svg << "\" fill=\"" << fill << "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
        } else if (r.classification == RegionKind::segment && r.vertices.size() == 2) {
            svg << "<line x1=\"" << fmt9(map.px(r.vertices[0].x)) << "\" y1=\""
                << fmt9(map.py(r.vertices[0].y)) << "\" x2=\"" << fmt9(map.px(r.vertices[1].x))
                << "\" y2=\"" << fmt9(map.py(r.vertices[1].y)) << "\" stroke=\"" << fill
                << "\" stroke-width=\"3\"/>\n";
        } else if (r.classification == RegionKind::point) {
            svg << "<circle cx=\"" << fmt9(map.px(r.chebyshev_center.x)) << "\" cy=\""
                << fmt9(map.py(r.chebyshev_center.y))
                << "\" r=\"4\" fill=\"" << fill << "\" stroke=\"#000000\"/>\n";
        }
    }

    if (!curve.empty()) {
        svg << "<polyline points=\"";
        for (std::size_t i = 0; i < curve.size(); ++i) {
            if (i) svg << " ";
            svg << fmt9(map.px(curve[i].point.real())) << ","
                << fmt9(map.py(curve[i].point.imag()));
        }
        svg << "\" fill=\"none\" stroke=\"#0066cc\" stroke-width=\"1\"/>\n";
    }

    for (const RankRegion* rp : sorted)
        for (const Vec2& c : rp->corner_points)
            svg << "<circle cx=\"" << fmt9(map.px(c.x)) << "\" cy=\"" << fmt9(map.py(c.y))
                << "\" r=\"3\" fill=\"#d62728\"/>\n";

    for (const VMarker& m : vset_markers) {
        const double x = map.px(m.second.real());
        const double y = map.py(m.second.imag());
        const char* color = kVsetPalette[std::size_t(std::max(m.first - 1, 0)) % 4];
        svg << "<path d=\"M " << fmt9(x) << " " << fmt9(y - 5.0) << " L " << fmt9(x + 5.0) << " "
            << fmt9(y) << " L " << fmt9(x) << " " << fmt9(y + 5.0) << " L " << fmt9(x - 5.0)
            << " " << fmt9(y) << " Z\" fill=\"" << color << "\"/>\n";
    }

    svg << "</svg>\n";
    return svg.str();
}

}  // namespace hrnr
