#pragma once

#include <cmath>
#include <span>
#include <vector>

namespace hrnr {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline double distance(Vec2 a, Vec2 b) { return norm(a - b); }

/// Half-plane {x + iy : x cos(theta) + y sin(theta) <= d}.
struct HalfPlane {
    double theta;
    double d;
};

/// Polygon vertex produced by the half-plane intersection, tagged with the
/// angles of the two generating boundary lines (theta_in precedes theta_out
/// counterclockwise).
struct TaggedVertex {
    Vec2 p;
    double theta_in;
    double theta_out;
};

/// Intersection of half-planes whose angles are strictly increasing over a
/// full sweep of [0, 2pi). Near-parallel planes (angle gap < 1e-9) are merged
/// keeping the smaller offset. The feasible set must be a nondegenerate convex
/// polygon; degenerate configurations raise NumericalError.
std::vector<TaggedVertex> halfplane_intersection(std::span<const HalfPlane> planes,
                                                 double eps_keep);

double dist_point_segment(Vec2 p, Vec2 a, Vec2 b);

/// Distance from a point to a filled convex region given by its vertices in
/// CCW order (1 vertex = point, 2 = segment). Zero inside.
double dist_point_convex(Vec2 p, std::span<const Vec2> verts);

/// Hausdorff distance between two filled convex regions (vertex lists).
double convex_hausdorff(std::span<const Vec2> a, std::span<const Vec2> b);

double polygon_diameter(std::span<const Vec2> verts);

bool is_ccw_convex(std::span<const Vec2> verts, double tol);

}  // namespace hrnr
