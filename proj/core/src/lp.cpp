#include "hrnr/lp.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <vector>

#include "hrnr/errors.hpp"

namespace hrnr {

namespace {

// Deterministic Fisher-Yates permutation (splitmix64 stream seeded by size):
// reproducible across runs, uncorrelated with the callers' angle ordering.
std::uint64_t splitmix(std::uint64_t& s) {
    s += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::vector<std::uint32_t> shuffled_order(std::size_t m) {
    std::vector<std::uint32_t> idx(m);
    std::iota(idx.begin(), idx.end(), 0u);
    std::uint64_t state = 0x5DEECE66DULL ^ (std::uint64_t(m) * 0x9E3779B97F4A7C15ULL);
    for (std::size_t i = m; i-- > 1;) {
        const std::size_t j = std::size_t(splitmix(state) % (i + 1));
        std::swap(idx[i], idx[j]);
    }
    return idx;
}

struct Con1 {
    double a, b;
};
struct Con2 {
    double a0, a1, b;
};
struct Con3 {
    double a0, a1, a2, b;
};

struct Res1 {
    bool feasible;
    double x;
};
struct Res2 {
    bool feasible;
    double x0, x1;
};
struct Res3 {
    bool feasible;
    double x0, x1, x2;
};

Res1 lp1_max(double c, double bound, const std::vector<Con1>& cons, double eps) {
    double lo = -bound, hi = bound;
    for (const Con1& g : cons) {
        const double mag = std::abs(g.a);
        if (mag <= 1e-14 * (1.0 + std::abs(g.b))) {
            if (g.b < -eps) return {false, 0.0};
            continue;
        }
        if (g.a > 0.0)
            hi = std::min(hi, g.b / g.a);
        else
            lo = std::max(lo, g.b / g.a);
    }
    if (lo > hi + eps) return {false, 0.0};
    if (lo > hi) lo = hi = 0.5 * (lo + hi);
    const double x = c > 0.0 ? hi : (c < 0.0 ? lo : std::clamp(0.0, lo, hi));
    return {true, x};
}

Res2 lp2_max(double c0, double c1, double bound, const std::vector<Con2>& cons, double eps) {
    double x0 = c0 > 0.0 ? bound : (c0 < 0.0 ? -bound : 0.0);
    double x1 = c1 > 0.0 ? bound : (c1 < 0.0 ? -bound : 0.0);
    const auto order = shuffled_order(cons.size());
    for (std::size_t t = 0; t < order.size(); ++t) {
        const Con2& h = cons[order[t]];
        if (h.a0 * x0 + h.a1 * x1 <= h.b + eps) continue;

        const bool pivot0 = std::abs(h.a0) >= std::abs(h.a1);
        const double ak = pivot0 ? h.a0 : h.a1;
        const double aw = pivot0 ? h.a1 : h.a0;
        if (std::abs(ak) <= 1e-14 * (1.0 + std::abs(h.b))) {
            if (h.b < -eps) return {false, 0.0, 0.0};
            continue;
        }
        std::vector<Con1> sub;
        sub.reserve(t + 2);
        for (std::size_t s = 0; s < t; ++s) {
            const Con2& g = cons[order[s]];
            const double gk = pivot0 ? g.a0 : g.a1;
            const double gw = pivot0 ? g.a1 : g.a0;
            sub.push_back({gw - gk * aw / ak, g.b - gk * h.b / ak});
        }
        // box bounds for the substituted variable
        sub.push_back({-aw / ak, bound - h.b / ak});
        sub.push_back({aw / ak, bound + h.b / ak});

        const double ck = pivot0 ? c0 : c1;
        const double cw = (pivot0 ? c1 : c0) - ck * aw / ak;
        const Res1 r = lp1_max(cw, bound, sub, eps);
        if (!r.feasible) return {false, 0.0, 0.0};
        const double w = r.x;
        const double k = (h.b - aw * w) / ak;
        x0 = pivot0 ? k : w;
        x1 = pivot0 ? w : k;
    }
    return {true, x0, x1};
}

Res3 lp3_max(const std::array<double, 3>& c, double bound, const std::vector<Con3>& cons,
             double eps) {
    std::array<double, 3> x;
    for (int m = 0; m < 3; ++m) x[m] = c[m] > 0.0 ? bound : (c[m] < 0.0 ? -bound : 0.0);

    const auto order = shuffled_order(cons.size());
    for (std::size_t t = 0; t < order.size(); ++t) {
        const Con3& h = cons[order[t]];
        const std::array<double, 3> ha = {h.a0, h.a1, h.a2};
        double lhs = 0.0;
        for (int m = 0; m < 3; ++m) lhs += ha[m] * x[m];
        if (lhs <= h.b + eps) continue;

        int k = 0;
        for (int m = 1; m < 3; ++m)
            if (std::abs(ha[m]) > std::abs(ha[k])) k = m;
        if (std::abs(ha[k]) <= 1e-14 * (1.0 + std::abs(h.b))) {
            if (h.b < -eps) return {false, 0.0, 0.0, 0.0};
            continue;
        }
        const int w0 = k == 0 ? 1 : 0;
        const int w1 = k == 2 ? 1 : 2;
        const double ak = ha[k];

        std::vector<Con2> sub;
        sub.reserve(t + 2);
        for (std::size_t s = 0; s < t; ++s) {
            const Con3& g = cons[order[s]];
            const std::array<double, 3> ga = {g.a0, g.a1, g.a2};
            sub.push_back({ga[w0] - ga[k] * ha[w0] / ak, ga[w1] - ga[k] * ha[w1] / ak,
                           g.b - ga[k] * h.b / ak});
        }
        sub.push_back({-ha[w0] / ak, -ha[w1] / ak, bound - h.b / ak});
        sub.push_back({ha[w0] / ak, ha[w1] / ak, bound + h.b / ak});

        const std::array<double, 3> cv = {c[0], c[1], c[2]};
        const double cw0 = cv[w0] - cv[k] * ha[w0] / ak;
        const double cw1 = cv[w1] - cv[k] * ha[w1] / ak;
        const Res2 r = lp2_max(cw0, cw1, bound, sub, eps);
        if (!r.feasible) return {false, 0.0, 0.0, 0.0};
        x[w0] = r.x0;
        x[w1] = r.x1;
        x[k] = (h.b - ha[w0] * r.x0 - ha[w1] * r.x1) / ak;
    }
    return {true, x[0], x[1], x[2]};
}

double max_angular_gap(std::span<const HalfPlane> planes) {
    std::vector<double> th;
    th.reserve(planes.size());
    for (const HalfPlane& h : planes) {
        double t = std::fmod(h.theta, 2.0 * std::numbers::pi);
        if (t < 0.0) t += 2.0 * std::numbers::pi;
        th.push_back(t);
    }
    std::sort(th.begin(), th.end());
    double gap = th.front() + 2.0 * std::numbers::pi - th.back();
    for (std::size_t i = 1; i < th.size(); ++i) gap = std::max(gap, th[i] - th[i - 1]);
    return gap;
}

}  // namespace

ChebyshevResult chebyshev_center(std::span<const HalfPlane> planes) {
    if (planes.size() < 3) throw InputError("chebyshev_center: need at least 3 half-planes");
    if (max_angular_gap(planes) >= std::numbers::pi - 1e-12)
        throw NumericalError("chebyshev_center: unbounded LP (angular gap >= pi)");

    double maxd = 0.0;
    for (const HalfPlane& h : planes) maxd = std::max(maxd, std::abs(h.d));
    const double bound = 64.0 * (1.0 + maxd);
    const double eps = 1e-10 * (1.0 + maxd);

    std::vector<Con3> cons;
    cons.reserve(planes.size());
    for (const HalfPlane& h : planes)
        cons.push_back({std::cos(h.theta), std::sin(h.theta), 1.0, h.d});

    const Res3 r = lp3_max({0.0, 0.0, 1.0}, bound, cons, eps);
    if (!r.feasible)
        throw NumericalError("chebyshev_center: LP reported infeasible (box too small)");
    if (std::abs(r.x0) > 0.99 * bound || std::abs(r.x1) > 0.99 * bound || r.x2 > 0.99 * bound)
        throw NumericalError("chebyshev_center: optimum escaped to the bounding box");
    return {{r.x0, r.x1}, r.x2};
}

namespace detail {

Vec2 lp2_support(std::span<const HalfPlane> planes, Vec2 objective) {
    double maxd = 0.0;
    for (const HalfPlane& h : planes) maxd = std::max(maxd, std::abs(h.d));
    const double bound = 64.0 * (1.0 + maxd);
    const double eps = 1e-10 * (1.0 + maxd);

    std::vector<Con2> cons;
    cons.reserve(planes.size());
    for (const HalfPlane& h : planes) cons.push_back({std::cos(h.theta), std::sin(h.theta), h.d});

    const Res2 r = lp2_max(objective.x, objective.y, bound, cons, eps);
    if (!r.feasible) throw NumericalError("lp2_support: infeasible constraint set");
    if (std::abs(r.x0) > 0.99 * bound || std::abs(r.x1) > 0.99 * bound)
        throw NumericalError("lp2_support: optimum escaped to the bounding box");
    return {r.x0, r.x1};
}

}  // namespace detail

}  // namespace hrnr
