#pragma once

#include <span>

#include "hrnr/geometry.hpp"

namespace hrnr {

struct ChebyshevResult {
    Vec2 center;
    double radius;  // negative when the half-plane intersection is empty
};

/// Deepest point of a sampled half-plane intersection: solves
///   maximize r  s.t.  x cos(theta_j) + y sin(theta_j) + r <= d_j
/// with a deterministic Seidel-style low-dimensional LP (fixed pseudo-random
/// processing order, reproducible across runs). Requires at least 3 planes
/// with maximal angular gap below pi; otherwise the LP is unbounded and a
/// NumericalError is raised.
ChebyshevResult chebyshev_center(std::span<const HalfPlane> planes);

namespace detail {

/// max c.(x,y) subject to a_j.(x,y) <= b_j within the implicit box |x|,|y| <= M.
/// Used for support probes of degenerate regions. Throws NumericalError when
/// infeasible beyond tolerance.
Vec2 lp2_support(std::span<const HalfPlane> planes, Vec2 objective);

}  // namespace detail

}  // namespace hrnr
