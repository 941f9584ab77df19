#include "hrnr/structure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "hrnr/errors.hpp"
#include "hrnr/hermitian_eigen.hpp"
#include "hrnr/kippenhahn.hpp"
#include "hrnr/trivariate_poly.hpp"

namespace hrnr {

namespace {

constexpr int kFactorAngles = 64;
constexpr double kFactorTol = 1e-7;       // per-angle root test, scale-relative
constexpr double kCommutatorTol = 1e-10;  // absolute, desk scale
constexpr double kPolyTol = 1e-8;         // condition (b) coefficient tolerance

double dedup_tol(double fro) { return 1e-8 * (1.0 + fro); }

}  // namespace

const char* to_string(Corollary2Verdict v) {
    switch (v) {
        case Corollary2Verdict::unitarily_equivalent: return "unitarily_equivalent";
        case Corollary2Verdict::not_equivalent: return "not_equivalent";
        case Corollary2Verdict::not_applicable: return "not_applicable";
    }
    return "?";
}

namespace detail {

double commutator_norm(const ComplexMatrix& a) {
    const ComplexMatrix ad = a.adjoint();
    return frobenius_norm(ad * a - a * ad);
}

bool is_companion(const ComplexMatrix& a) {
    const std::size_t n = a.dim();
    if (n < 2) return false;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j + 1 < n; ++j) {
            const cplx want = (i == j + 1) ? cplx(1.0) : cplx(0.0);
            if (a(i, j) != want) return false;
        }
    }
    return true;
}

std::vector<cplx> normal_eigenvalues(const ComplexMatrix& a) {
    const std::size_t n = a.dim();
    const HermitianMatrix re = re_part(a);
    const HermitianMatrix im = im_part(a);
    const EigenDecomposition ed = eig_hermitian(re);

    // B = V* (Im A) V; block-diagonal within clusters of equal Re-eigenvalues
    const ComplexMatrix b = ed.vectors.adjoint() * (im.matrix() * ed.vectors);

    const double ctol = dedup_tol(frobenius_norm(a));
    std::vector<cplx> out;
    out.reserve(n);
    std::size_t lo = 0;
    while (lo < n) {
        std::size_t hi = lo + 1;
        while (hi < n && std::abs(ed.values[hi] - ed.values[hi - 1]) <= ctol) ++hi;
        const std::size_t width = hi - lo;
        if (width == 1) {
            out.emplace_back(ed.values[lo], b(lo, lo).real());
        } else {
            ComplexMatrix sub(width);
            for (std::size_t i = 0; i < width; ++i)
                for (std::size_t j = 0; j < width; ++j) sub(i, j) = b(lo + i, lo + j);
            const EigenDecomposition sd = eig_hermitian(HermitianMatrix::symmetrized(sub));
            for (std::size_t t = 0; t < width; ++t) {
                // real part refined through the sub-eigenvector
                double repart = 0.0;
                for (std::size_t r = 0; r < width; ++r)
                    repart += std::norm(sd.vectors(r, t)) * ed.values[lo + r];
                out.emplace_back(repart, sd.values[t]);
            }
        }
        lo = hi;
    }
    return out;
}

}  // namespace detail

std::vector<LinearFactor> real_linear_factors(const ComplexMatrix& a) {
    const std::size_t n = a.dim();
    const double fro = frobenius_norm(a);
    const double dtol = dedup_tol(fro);

    const TrivariatePoly p = kippenhahn_poly(a);
    const EigenDecomposition re_ed = eig_hermitian(re_part(a));
    const EigenDecomposition im_ed = eig_hermitian(im_part(a));

    // any factor point a+bi has a in spec(Re A) and b in spec(Im A)
    std::vector<cplx> candidates;
    for (double re : re_ed.values)
        for (double im : im_ed.values) {
            const cplx c(re, im);
            bool known = false;
            for (const cplx& k : candidates)
                if (std::abs(k - c) <= dtol) {
                    known = true;
                    break;
                }
            if (!known) candidates.push_back(c);
        }

    std::vector<LinearFactor> out;
    int total = 0;
    for (const cplx& c : candidates) {
        int m = std::numeric_limits<int>::max();
        for (int t = 0; t < kFactorAngles && m > 0; ++t) {
            const double theta = 2.0 * std::numbers::pi * double(t) / double(kFactorAngles);
            const double root = -(c.real() * std::cos(theta) + c.imag() * std::sin(theta));
            m = std::min(m, z_root_multiplicity(p, theta, root, kFactorTol));
        }
        if (m >= 1) {
            out.push_back({c.real(), c.imag(), m});
            total += m;
        }
    }
    if (total > int(n)) {
        std::ostringstream os;
        os << "real_linear_factors: multiplicities sum to " << total << " > n=" << n;
        throw NumericalError(os.str());
    }
    std::sort(out.begin(), out.end(), [](const LinearFactor& x, const LinearFactor& y) {
        return x.a != y.a ? x.a < y.a : x.b < y.b;
    });
    return out;
}

VSets v_sets(const ComplexMatrix& a, int grid) {
    const int n = int(a.dim());
    const int half = n / 2;
    const int k_top = half + 1;
    const double tol = geo_tolerance(frobenius_norm(a));

    const std::vector<LinearFactor> factors = real_linear_factors(a);
    const detail::ProfileTable t = detail::build_profile_table(a, grid);

    VSets out;
    out.sets.assign(std::size_t(half), {});

    const detail::RegionBuild top =
        detail::build_region(t.alpha[std::size_t(k_top - 1)], t.thetas, tol);
    if (top.region.classification == RegionKind::point)
        out.top = cplx(top.region.chebyshev_center.x, top.region.chebyshev_center.y);
    else if (top.region.classification != RegionKind::empty)
        throw NumericalError("v_sets: top range is neither empty nor a point");

    for (const LinearFactor& f : factors) {
        const cplx pt(f.a, f.b);
        const double top_margin =
            detail::membership_margin(t.alpha[std::size_t(k_top - 1)], t.thetas, pt);
        if (top_margin >= -tol) {
            if (!out.top.has_value())
                throw NumericalError("v_sets: factor point inside an empty top range");
            if (std::abs(pt - *out.top) > 16.0 * tol)
                throw NumericalError("v_sets: factor point disagrees with the top range point");
            continue;  // accounted for by `top`
        }
        int k0 = 0;
        for (int k = k_top - 1; k >= 1; --k) {
            const double margin =
                detail::membership_margin(t.alpha[std::size_t(k - 1)], t.thetas, pt);
            if (margin >= -tol) {  // boundary counts as inside
                k0 = k;
                break;
            }
        }
        if (k0 == 0) throw NumericalError("v_sets: factor point not found in any range");
        const int ell = k0 - f.multiplicity + 1;
        if (ell < 1 || ell > half) {
            std::ostringstream os;
            os << "v_sets: factor at (" << f.a << "," << f.b << ") assigned level " << ell
               << " outside [1," << half << "] (numerical tolerance failure)";
            throw NumericalError(os.str());
        }
        out.sets[std::size_t(ell - 1)].push_back(pt);
    }
    return out;
}

bool normality_test(const ComplexMatrix& a) {
    const std::vector<LinearFactor> factors = real_linear_factors(a);
    int total = 0;
    for (const LinearFactor& f : factors) total += f.multiplicity;
    const bool by_factors = total == int(a.dim());

    const bool by_commutator = detail::commutator_norm(a) <= kCommutatorTol;
    if (by_factors != by_commutator) {
        std::ostringstream os;
        os << "normality_test: factor criterion (" << (by_factors ? "normal" : "not normal")
           << ", sum=" << total << ") disagrees with commutator criterion (norm="
           << detail::commutator_norm(a) << ")";
        throw NumericalError(os.str());
    }
    return by_factors;
}

Corollary2Verdict corollary2_check(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) throw InputError("corollary2_check: dimension mismatch");
    const std::size_t n = a.dim();
    const double tol = 1e-8 * (1.0 + std::max(frobenius_norm(a), frobenius_norm(b)));

    if (n == 2) {
        // trace, determinant and Frobenius norm are complete unitary invariants
        const cplx det_a = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
        const cplx det_b = b(0, 0) * b(1, 1) - b(0, 1) * b(1, 0);
        const bool eq = std::abs(trace(a) - trace(b)) <= tol && std::abs(det_a - det_b) <= tol &&
                        std::abs(frobenius_norm(a) - frobenius_norm(b)) <= tol;
        return eq ? Corollary2Verdict::unitarily_equivalent : Corollary2Verdict::not_equivalent;
    }

    const bool normal_a = detail::commutator_norm(a) <= kCommutatorTol;
    const bool normal_b = detail::commutator_norm(b) <= kCommutatorTol;
    if (normal_a && normal_b) {
        std::vector<cplx> ea = detail::normal_eigenvalues(a);
        std::vector<cplx> eb = detail::normal_eigenvalues(b);
        // greedy multiset matching
        for (const cplx& x : ea) {
            double best = std::numeric_limits<double>::infinity();
            std::size_t arg = eb.size();
            for (std::size_t j = 0; j < eb.size(); ++j) {
                const double d = std::abs(eb[j] - x);
                if (d < best) {
                    best = d;
                    arg = j;
                }
            }
            if (arg == eb.size() || best > tol) return Corollary2Verdict::not_equivalent;
            eb.erase(eb.begin() + std::ptrdiff_t(arg));
        }
        return Corollary2Verdict::unitarily_equivalent;
    }

    if (detail::is_companion(a) && detail::is_companion(b)) {
        // equal characteristic polynomials mean the companion matrices are equal
        for (std::size_t i = 0; i < n; ++i)
            if (std::abs(a(i, n - 1) - b(i, n - 1)) > tol)
                return Corollary2Verdict::not_equivalent;
        return Corollary2Verdict::unitarily_equivalent;
    }

    return Corollary2Verdict::not_applicable;
}

EquivalenceReport theorem1_check(const ComplexMatrix& a, const ComplexMatrix& b, int grid,
                                 double tol) {
    if (a.dim() != b.dim()) throw InputError("theorem1_check: dimension mismatch");
    const int n = int(a.dim());
    const int k_top = n / 2 + 1;
    if (tol <= 0.0)
        tol = geo_tolerance(std::max(frobenius_norm(a), frobenius_norm(b)));

    EquivalenceReport rep;
    rep.grid = grid;
    rep.tol_geo = tol;
    rep.tol_poly = kPolyTol;

    const detail::ProfileTable ta = detail::build_profile_table(a, grid);
    const detail::ProfileTable tb = detail::build_profile_table(b, grid);

    // (c) support functions coincide for every k
    double cres = 0.0;
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < grid; ++j)
            cres = std::max(cres, std::abs(ta.alpha[std::size_t(k)][std::size_t(j)] -
                                           tb.alpha[std::size_t(k)][std::size_t(j)]));
    rep.cond_c = cres <= tol;
    rep.cond_c_residual = cres;

    // (b) Kippenhahn polynomials coincide
    const PolyCompare pc = poly_equal(kippenhahn_poly(a), kippenhahn_poly(b), kPolyTol);
    rep.cond_b = pc.equal;
    rep.cond_b_residual = pc.residual;

    // (a) ranges coincide for k = 1..floor(n/2)+1
    rep.cond_a = true;
    rep.cond_a_residuals.resize(std::size_t(k_top), 0.0);
    for (int k = 1; k <= k_top; ++k) {
        const ConvexRegion ra =
            detail::build_region(ta.alpha[std::size_t(k - 1)], ta.thetas, tol).region;
        const ConvexRegion rb =
            detail::build_region(tb.alpha[std::size_t(k - 1)], tb.thetas, tol).region;
        const double d = region_distance(ra, rb);
        rep.cond_a_residuals[std::size_t(k - 1)] = d;
        if (!(d <= tol)) rep.cond_a = false;
    }

    rep.consistent = (rep.cond_a == rep.cond_b) && (rep.cond_b == rep.cond_c);
    return rep;
}

}  // namespace hrnr
