#pragma once

#include <optional>
#include <vector>

#include "hrnr/complex_matrix.hpp"
#include "hrnr/geometry.hpp"

namespace hrnr {

inline constexpr int kDefaultGrid = 1024;

/// Geometric tolerance knob: 1e-6 * (1 + ||A||_F). All region classification
/// thresholds derive from this single value.
inline double geo_tolerance(double frobenius) { return 1e-6 * (1.0 + frobenius); }

/// Sampled support function alpha_k(theta) = lambda_k(Re(e^{-i theta} A)) on a
/// uniform grid. Construction verifies the wraparound Lipschitz bound
/// |values[j+1] - values[j]| <= lipschitz * (2pi/N) * (1 + 1e-9) (plus a small
/// solver-noise floor) and throws NumericalError on violation.
struct SupportProfile {
    int k = 1;
    std::vector<double> thetas;
    std::vector<double> values;
    double lipschitz = 0.0;  // ||A||_F
};

SupportProfile support_profile(const ComplexMatrix& a, int k, int grid = kDefaultGrid);

enum class RegionKind { empty, point, segment, full };

const char* to_string(RegionKind k);

/// Polygonal approximation of a rank-k numerical range with degeneracy
/// classification. Vertices are CCW; absent when empty; a point region keeps
/// its single point and a segment its two endpoints.
struct ConvexRegion {
    RegionKind classification = RegionKind::empty;
    std::vector<Vec2> vertices;
    Vec2 chebyshev_center;
    double chebyshev_radius = 0.0;
};

/// Intersection of the grid's half-planes H_theta = {Re(e^{-i theta} z) <=
/// alpha_k(theta)}. Classification by Chebyshev radius r and diameter d:
/// r < -tol empty; |r| <= tol and d <= tol point; |r| <= tol and d > tol
/// segment; otherwise full. tol <= 0 selects geo_tolerance(||A||_F).
ConvexRegion rank_k_range(const ComplexMatrix& a, int k, int grid = kDefaultGrid,
                          double tol = 0.0);

enum class Membership { inside, boundary, outside };

const char* to_string(Membership m);

struct MembershipResult {
    Membership verdict;
    double margin;  // min over the grid of alpha_k(theta) - Re(e^{-i theta} lambda)
};

MembershipResult membership(const ComplexMatrix& a, int k, cplx lambda,
                            int grid = kDefaultGrid, double tol = 0.0);

/// Boundary points supported over an angular interval of at least two grid
/// steps. Segments report both endpoints; a point region reports its point.
/// Throws InputError on an empty region.
std::vector<Vec2> corners(const ComplexMatrix& a, int k, int grid = kDefaultGrid,
                          double tol = 0.0);

/// Tangency point sample of the boundary generating curve: the point
/// <(Re A)v, v> + i <(Im A)v, v> for a unit eigenvector v of
/// lambda_k(Re(e^{-i theta} A)).
struct CurveSample {
    double theta;
    cplx point;
};

std::vector<CurveSample> boundary_curve_points(const ComplexMatrix& a, int k,
                                               int grid = kDefaultGrid);

/// Hausdorff distance of the polygon approximations. +inf when exactly one
/// region is empty, 0 when both are.
double region_distance(const ConvexRegion& r1, const ConvexRegion& r2);

namespace detail {

/// All support values at once: alpha[k-1][j] for k = 1..n over the angle grid.
struct ProfileTable {
    int grid = 0;
    double lipschitz = 0.0;
    std::vector<double> thetas;
    std::vector<std::vector<double>> alpha;
};

ProfileTable build_profile_table(const ComplexMatrix& a, int grid);

struct RegionBuild {
    ConvexRegion region;
    std::vector<Vec2> corner_points;
};

RegionBuild build_region(std::span<const double> alpha, std::span<const double> thetas,
                         double tol);

double membership_margin(std::span<const double> alpha, std::span<const double> thetas,
                         cplx lambda);

}  // namespace detail

}  // namespace hrnr
