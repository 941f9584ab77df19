#include "hrnr/trivariate_poly.hpp"

#include <cassert>
#include <cmath>
#include <limits>

#include "hrnr/errors.hpp"

namespace hrnr {

namespace {

// Fujiwara root-radius bound for a real polynomial with leading index `deg`.
double root_radius_bound(const std::vector<double>& a, int deg) {
    const double lead = std::abs(a[deg]);
    if (lead == 0.0) return 0.0;
    double best = 0.0;
    for (int m = 0; m < deg; ++m) {
        if (a[m] == 0.0) continue;
        const double r = std::pow(std::abs(a[m]) / lead, 1.0 / double(deg - m));
        best = std::max(best, r);
    }
    return 2.0 * best;
}

double horner(const std::vector<double>& a, int deg, double t) {
    double v = a[deg];
    for (int k = deg - 1; k >= 0; --k) v = v * t + a[k];
    return v;
}

}  // namespace

TrivariatePoly::TrivariatePoly(int degree) : degree_(degree) {
    if (degree < 0) throw InputError("TrivariatePoly: negative degree");
    coeffs_.assign(std::size_t(degree + 1) * std::size_t(degree + 2) / 2, 0.0);
}

std::size_t TrivariatePoly::index(int degree, int i, int j) {
    assert(i >= 0 && j >= 0 && i + j <= degree);
    return std::size_t(i) * std::size_t(degree + 1) - std::size_t(i) * std::size_t(i - 1) / 2 +
           std::size_t(j);
}

double TrivariatePoly::coeff(int i, int j, int k) const {
    assert(i + j + k == degree_);
    (void)k;
    return coeffs_[index(degree_, i, j)];
}

void TrivariatePoly::set_coeff(int i, int j, int k, double c) {
    assert(i + j + k == degree_);
    (void)k;
    coeffs_[index(degree_, i, j)] = c;
}

std::vector<double> TrivariatePoly::z_coeffs_at(double x0, double y0) const {
    const int n = degree_;
    std::vector<double> xp(n + 1, 1.0), yp(n + 1, 1.0);
    for (int t = 1; t <= n; ++t) {
        xp[t] = xp[t - 1] * x0;
        yp[t] = yp[t - 1] * y0;
    }
    std::vector<double> out(n + 1, 0.0);
    std::size_t idx = 0;
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n - i; ++j, ++idx) out[n - i - j] += coeffs_[idx] * xp[i] * yp[j];
    return out;
}

double TrivariatePoly::eval(double x, double y, double z) const {
    const auto a = z_coeffs_at(x, y);
    return horner(a, degree_, z);
}

double TrivariatePoly::max_abs_coeff() const {
    double m = 0.0;
    for (double c : coeffs_) m = std::max(m, std::abs(c));
    return m;
}

PolyCompare poly_equal(const TrivariatePoly& p, const TrivariatePoly& q, double tol) {
    if (p.degree() != q.degree())
        return {false, std::numeric_limits<double>::infinity()};
    double residual = 0.0;
    for (std::size_t t = 0; t < p.coeffs().size(); ++t)
        residual = std::max(residual, std::abs(p.coeffs()[t] - q.coeffs()[t]));
    const double scale = 1.0 + std::max(p.max_abs_coeff(), q.max_abs_coeff());
    return {residual <= tol * scale, residual};
}

int z_root_multiplicity(const TrivariatePoly& p, double theta, double t, double tol) {
    std::vector<double> a = p.z_coeffs_at(std::cos(theta), std::sin(theta));
    double maxabs = 0.0;
    for (double c : a) maxabs = std::max(maxabs, std::abs(c));
    if (maxabs == 0.0) return p.degree();  // the whole slice vanishes

    int deg = p.degree();
    while (deg > 0 && std::abs(a[deg]) <= 1e-12 * maxabs) --deg;

    const double rho = std::max(std::abs(t), root_radius_bound(a, deg));
    std::vector<double> rp(deg + 1, 1.0);
    for (int k = 1; k <= deg; ++k) rp[k] = rp[k - 1] * rho;

    std::vector<double> der(a.begin(), a.begin() + deg + 1);
    int dd = deg;
    int m = 0;
    while (m <= deg) {
        const double val = horner(der, dd, t);
        double scale = 0.0;
        for (int k = 0; k <= dd; ++k) scale += std::abs(der[k]) * rp[k];
        if (!(std::abs(val) <= tol * scale)) break;
        ++m;
        if (m > deg) break;
        for (int k = 0; k < dd; ++k) der[k] = der[k + 1] * double(k + 1);
        --dd;
        der.resize(dd + 1);
    }
    return m;
}

}  // namespace hrnr
