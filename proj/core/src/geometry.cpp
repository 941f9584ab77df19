#include "hrnr/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

#include "hrnr/errors.hpp"

namespace hrnr {

namespace {

struct Line {
    double nx, ny, off, theta;
};

Vec2 intersect(const Line& a, const Line& b) {
    const double det = a.nx * b.ny - a.ny * b.nx;  // sin(theta_b - theta_a)
    if (std::abs(det) < 1e-13)
        throw NumericalError("halfplane_intersection: near-parallel adjacent boundary lines");
    return {(a.off * b.ny - b.off * a.ny) / det, (a.nx * b.off - b.nx * a.off) / det};
}

bool inside(const Line& l, Vec2 p, double eps) { return l.nx * p.x + l.ny * p.y <= l.off + eps; }

}  // namespace

std::vector<TaggedVertex> halfplane_intersection(std::span<const HalfPlane> planes,
                                                 double eps_keep) {
    std::vector<Line> lines;
    lines.reserve(planes.size());
    for (const HalfPlane& h : planes) {
        if (!lines.empty() && h.theta - lines.back().theta < 1e-9) {
            if (h.d < lines.back().off) lines.back().off = h.d;  // merge near-parallel
            continue;
        }
        lines.push_back({std::cos(h.theta), std::sin(h.theta), h.d, h.theta});
    }
    if (lines.size() < 3) throw NumericalError("halfplane_intersection: fewer than 3 planes");

    std::deque<Line> dq;
    for (const Line& l : lines) {
        while (dq.size() >= 2 && !inside(l, intersect(dq[dq.size() - 2], dq.back()), eps_keep))
            dq.pop_back();
        while (dq.size() >= 2 && !inside(l, intersect(dq[0], dq[1]), eps_keep)) dq.pop_front();
        dq.push_back(l);
    }
    while (dq.size() >= 3 && !inside(dq.front(), intersect(dq[dq.size() - 2], dq.back()), eps_keep))
        dq.pop_back();
    while (dq.size() >= 3 && !inside(dq.back(), intersect(dq[0], dq[1]), eps_keep)) dq.pop_front();

    if (dq.size() < 3) throw NumericalError("halfplane_intersection: degenerate feasible set");

    std::vector<TaggedVertex> verts;
    verts.reserve(dq.size());
    for (std::size_t i = 0; i < dq.size(); ++i) {
        const Line& a = dq[i];
        const Line& b = dq[(i + 1) % dq.size()];
        verts.push_back({intersect(a, b), a.theta, b.theta});
    }
    return verts;
}

double dist_point_segment(Vec2 p, Vec2 a, Vec2 b) {
    const Vec2 ab = b - a;
    const double len2 = dot(ab, ab);
    if (len2 == 0.0) return distance(p, a);
    const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
    return distance(p, a + t * ab);
}

double dist_point_convex(Vec2 p, std::span<const Vec2> verts) {
    if (verts.empty()) return std::numeric_limits<double>::infinity();
    if (verts.size() == 1) return distance(p, verts[0]);
    if (verts.size() == 2) return dist_point_segment(p, verts[0], verts[1]);

    bool inside_all = true;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < verts.size(); ++i) {
        const Vec2 a = verts[i];
        const Vec2 b = verts[(i + 1) % verts.size()];
        if (cross(b - a, p - a) < 0.0) inside_all = false;
        best = std::min(best, dist_point_segment(p, a, b));
    }
    return inside_all ? 0.0 : best;
}

double convex_hausdorff(std::span<const Vec2> a, std::span<const Vec2> b) {
    double h = 0.0;
    for (const Vec2& p : a) h = std::max(h, dist_point_convex(p, b));
    for (const Vec2& p : b) h = std::max(h, dist_point_convex(p, a));
    return h;
}

double polygon_diameter(std::span<const Vec2> verts) {
    double d = 0.0;
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            d = std::max(d, distance(verts[i], verts[j]));
    return d;
}

bool is_ccw_convex(std::span<const Vec2> verts, double tol) {
    if (verts.size() < 3) return true;
    for (std::size_t i = 0; i < verts.size(); ++i) {
        const Vec2 a = verts[i];
        const Vec2 b = verts[(i + 1) % verts.size()];
        const Vec2 c = verts[(i + 2) % verts.size()];
        if (cross(b - a, c - b) < -tol) return false;
    }
    return true;
}

}  // namespace hrnr
