#include "hrnr/ranges.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "hrnr/errors.hpp"
#include "hrnr/hermitian_eigen.hpp"
#include "hrnr/lp.hpp"
#include "hrnr/parallel.hpp"

namespace hrnr {

const char* to_string(RegionKind k) {
    switch (k) {
        case RegionKind::empty: return "empty";
        case RegionKind::point: return "point";
        case RegionKind::segment: return "segment";
        case RegionKind::full: return "full";
    }
    return "?";
}

const char* to_string(Membership m) {
    switch (m) {
        case Membership::inside: return "inside";
        case Membership::boundary: return "boundary";
        case Membership::outside: return "outside";
    }
    return "?";
}

namespace detail {

ProfileTable build_profile_table(const ComplexMatrix& a, int grid) {
    if (grid < 16) throw InputError("support profile: grid must be at least 16");
    const std::size_t n = a.dim();
    if (n == 0) throw InputError("support profile: empty matrix");

    ProfileTable t;
    t.grid = grid;
    t.lipschitz = frobenius_norm(a);
    t.thetas.resize(std::size_t(grid));
    const double step = 2.0 * std::numbers::pi / double(grid);
    for (int j = 0; j < grid; ++j) t.thetas[std::size_t(j)] = double(j) * step;

    t.alpha.assign(n, std::vector<double>(std::size_t(grid), 0.0));
    parallel_for(std::size_t(grid), [&](std::size_t j) {
        const EigenDecomposition ed = eig_hermitian(rotated_re(a, t.thetas[j]));
        for (std::size_t k = 0; k < n; ++k) t.alpha[k][j] = ed.values[k];
    });

    // wraparound Lipschitz bound from eigenvalue perturbation, with a small
    // floor for solver noise
    const double bound = t.lipschitz * step * (1.0 + 1e-9) + 1e-12 * (1.0 + t.lipschitz);
    for (std::size_t k = 0; k < n; ++k) {
        for (int j = 0; j < grid; ++j) {
            const double d =
                std::abs(t.alpha[k][std::size_t((j + 1) % grid)] - t.alpha[k][std::size_t(j)]);
            if (d > bound) {
                std::ostringstream os;
                os << "support profile: Lipschitz bound violated at k=" << (k + 1)
                   << " theta index " << j << " (step " << d << " > " << bound << ")";
                throw NumericalError(os.str());
            }
        }
    }
    return t;
}

double membership_margin(std::span<const double> alpha, std::span<const double> thetas,
                         cplx lambda) {
    double margin = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < thetas.size(); ++j) {
        const double proj =
            lambda.real() * std::cos(thetas[j]) + lambda.imag() * std::sin(thetas[j]);
        margin = std::min(margin, alpha[j] - proj);
    }
    return margin;
}

namespace {

struct MergedVertex {
    Vec2 p;
    double span;  // angular width of the supporting normal cone
};

Vec2 intersect_support_lines(double th_a, double d_a, double th_b, double d_b, Vec2 fallback) {
    const double det = std::cos(th_a) * std::sin(th_b) - std::sin(th_a) * std::cos(th_b);
    if (std::abs(det) < 1e-9) return fallback;
    return {(d_a * std::sin(th_b) - d_b * std::sin(th_a)) / det,
            (std::cos(th_a) * d_b - std::cos(th_b) * d_a) / det};
}

}  // namespace

RegionBuild build_region(std::span<const double> alpha, std::span<const double> thetas,
                         double tol) {
    const int grid = int(thetas.size());
    const double step = 2.0 * std::numbers::pi / double(grid);

    std::vector<HalfPlane> planes(static_cast<std::size_t>(grid));
    for (int j = 0; j < grid; ++j)
        planes[std::size_t(j)] = {thetas[std::size_t(j)], alpha[std::size_t(j)]};

    const ChebyshevResult cheb = chebyshev_center(planes);

    RegionBuild out;
    out.region.chebyshev_center = cheb.center;
    out.region.chebyshev_radius = cheb.radius;

    if (cheb.radius < -tol) {
        out.region.classification = RegionKind::empty;
        return out;
    }

    if (cheb.radius <= tol) {
        // point or segment: probe support optimizers along every grid direction
        std::vector<Vec2> reps;
        for (int j = 0; j < grid; ++j) {
            const double th = thetas[std::size_t(j)];
            const Vec2 p = detail::lp2_support(planes, {std::cos(th), std::sin(th)});
            bool known = false;
            for (const Vec2& r : reps)
                if (distance(r, p) <= tol) {
                    known = true;
                    break;
                }
            if (!known) reps.push_back(p);
        }
        double diam = 0.0;
        Vec2 e1 = cheb.center, e2 = cheb.center;
        for (std::size_t i = 0; i < reps.size(); ++i)
            for (std::size_t j = i + 1; j < reps.size(); ++j) {
                const double d = distance(reps[i], reps[j]);
                if (d > diam) {
                    diam = d;
                    e1 = reps[i];
                    e2 = reps[j];
                }
            }
        if (diam <= tol) {
            out.region.classification = RegionKind::point;
            out.region.vertices = {cheb.center};
            out.corner_points = {cheb.center};
        } else {
            if (e2.x < e1.x || (e2.x == e1.x && e2.y < e1.y)) std::swap(e1, e2);
            out.region.classification = RegionKind::segment;
            out.region.vertices = {e1, e2};
            out.corner_points = {e1, e2};
        }
        return out;
    }

    // full region
    out.region.classification = RegionKind::full;
    double maxd = 0.0;
    for (const HalfPlane& h : planes) maxd = std::max(maxd, std::abs(h.d));
    const double keep = 1e-11 * (1.0 + maxd);
    std::vector<TaggedVertex> raw = halfplane_intersection(planes, keep);
    const std::size_t m = raw.size();

    auto offset_at = [&](double theta) {
        long j = std::lround(theta / step);
        j %= grid;
        if (j < 0) j += grid;
        return alpha[std::size_t(j)];
    };

    // merge cyclic runs of coincident vertices (support-line concurrency)
    std::size_t start = m;
    for (std::size_t i = 0; i < m; ++i) {
        if (distance(raw[i].p, raw[(i + m - 1) % m].p) > tol) {
            start = i;
            break;
        }
    }
    std::vector<MergedVertex> merged;
    if (start == m) {
        // everything coincides although the inradius is positive
        throw NumericalError("rank_k_range: full region collapsed during vertex merge");
    }
    std::size_t i = start;
    std::size_t seen = 0;
    while (seen < m) {
        const std::size_t first = i;
        std::size_t last = i;
        ++seen;
        while (seen < m) {
            const std::size_t nxt = (last + 1) % m;
            if (distance(raw[nxt].p, raw[last].p) > tol) break;
            last = nxt;
            ++seen;
        }
        const double th_in = raw[first].theta_in;
        const double th_out = raw[last].theta_out;
        double span = th_out - th_in;
        span = std::fmod(span, 2.0 * std::numbers::pi);
        if (span < 0.0) span += 2.0 * std::numbers::pi;
        Vec2 pos = raw[first].p;
        if (last != first)
            pos = intersect_support_lines(th_in, offset_at(th_in), th_out, offset_at(th_out),
                                          raw[first].p);
        merged.push_back({pos, span});
        i = (last + 1) % m;
    }

    std::vector<Vec2> corner_pts;
    for (const MergedVertex& v : merged)
        if (v.span >= 2.0 * step * (1.0 - 1e-6)) corner_pts.push_back(v.p);
    out.corner_points = corner_pts;

    std::vector<Vec2> merged_pts;
    merged_pts.reserve(merged.size());
    for (const MergedVertex& v : merged) merged_pts.push_back(v.p);

    // snap to the corner polygon when it reproduces the sampled intersection:
    // removes the O(step * edge) overshoot of consecutive support lines
    bool snapped = false;
    if (corner_pts.size() >= 3) {
        const double diam = polygon_diameter(corner_pts);
        const double margin = step * (diam + 1.0e-9) + 8.0 * tol;
        bool ok = true;
        for (const Vec2& p : merged_pts)
            if (dist_point_convex(p, corner_pts) > margin) {
                ok = false;
                break;
            }
        if (ok) {
            out.region.vertices = corner_pts;
            snapped = true;
        }
    }
    if (!snapped) {
        if (merged_pts.size() >= 3) {
            out.region.vertices = merged_pts;
        } else {
            out.region.vertices.clear();
            for (const TaggedVertex& v : raw) out.region.vertices.push_back(v.p);
        }
    }
    if (out.region.vertices.size() < 3)
        throw NumericalError("rank_k_range: polygon extraction failed");
    return out;
}

}  // namespace detail

SupportProfile support_profile(const ComplexMatrix& a, int k, int grid) {
    const int n = int(a.dim());
    if (k < 1 || k > n) throw InputError("support_profile: rank index out of range");
    const detail::ProfileTable t = detail::build_profile_table(a, grid);
    SupportProfile p;
    p.k = k;
    p.thetas = t.thetas;
    p.values = t.alpha[std::size_t(k - 1)];
    p.lipschitz = t.lipschitz;
    return p;
}

ConvexRegion rank_k_range(const ComplexMatrix& a, int k, int grid, double tol) {
    const int n = int(a.dim());
    if (k < 1 || k > n) throw InputError("rank_k_range: rank index out of range");
    if (tol <= 0.0) tol = geo_tolerance(frobenius_norm(a));
    const detail::ProfileTable t = detail::build_profile_table(a, grid);
    return detail::build_region(t.alpha[std::size_t(k - 1)], t.thetas, tol).region;
}

MembershipResult membership(const ComplexMatrix& a, int k, cplx lambda, int grid, double tol) {
    const int n = int(a.dim());
    if (k < 1 || k > n) throw InputError("membership: rank index out of range");
    if (tol <= 0.0) tol = geo_tolerance(frobenius_norm(a));
    const detail::ProfileTable t = detail::build_profile_table(a, grid);
    const double margin =
        detail::membership_margin(t.alpha[std::size_t(k - 1)], t.thetas, lambda);
    Membership verdict = Membership::boundary;
    if (margin > tol)
        verdict = Membership::inside;
    else if (margin < -tol)
        verdict = Membership::outside;
    return {verdict, margin};
}

std::vector<Vec2> corners(const ComplexMatrix& a, int k, int grid, double tol) {
    const int n = int(a.dim());
    if (k < 1 || k > n) throw InputError("corners: rank index out of range");
    if (tol <= 0.0) tol = geo_tolerance(frobenius_norm(a));
    const detail::ProfileTable t = detail::build_profile_table(a, grid);
    const detail::RegionBuild rb =
        detail::build_region(t.alpha[std::size_t(k - 1)], t.thetas, tol);
    if (rb.region.classification == RegionKind::empty)
        throw InputError("corners: empty region");
    return rb.corner_points;
}

std::vector<CurveSample> boundary_curve_points(const ComplexMatrix& a, int k, int grid) {
    const std::size_t n = a.dim();
    if (k < 1 || std::size_t(k) > n) throw InputError("boundary_curve_points: rank out of range");
    if (grid < 16) throw InputError("boundary_curve_points: grid must be at least 16");
    const HermitianMatrix re = re_part(a);
    const HermitianMatrix im = im_part(a);
    const double fro = frobenius_norm(a);
    const double step = 2.0 * std::numbers::pi / double(grid);

    std::vector<CurveSample> out(static_cast<std::size_t>(grid));
    detail::parallel_for(std::size_t(grid), [&](std::size_t j) {
        const double theta = double(j) * step;
        const EigenDecomposition ed = eig_hermitian(rotated_re(a, theta));
        std::vector<cplx> v(n);
        for (std::size_t r = 0; r < n; ++r) v[r] = ed.vectors(r, std::size_t(k - 1));
        const double px = quadratic_form(re, v);
        const double py = quadratic_form(im, v);
        const double support = px * std::cos(theta) + py * std::sin(theta);
        if (std::abs(support - ed.values[std::size_t(k - 1)]) > 1e-9 * (1.0 + fro))
            throw NumericalError("boundary_curve_points: tangency invariant violated");
        out[j] = {theta, cplx(px, py)};
    });
    return out;
}

double region_distance(const ConvexRegion& r1, const ConvexRegion& r2) {
    const bool e1 = r1.classification == RegionKind::empty;
    const bool e2 = r2.classification == RegionKind::empty;
    if (e1 && e2) return 0.0;
    if (e1 != e2) return std::numeric_limits<double>::infinity();
    return convex_hausdorff(r1.vertices, r2.vertices);
}

}  // namespace hrnr
