#include "hrnr/kippenhahn.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "hrnr/errors.hpp"
#include "hrnr/hermitian_eigen.hpp"
#include "hrnr/parallel.hpp"

namespace hrnr {

namespace {

// Householder QR least squares for a small dense system (rows >= cols).
// Returns x minimizing ||M x - rhs||_2 and the residual infinity norm.
struct LstsqResult {
    std::vector<double> x;
    double residual_inf;
};

LstsqResult lstsq(std::vector<std::vector<double>> m, std::vector<double> rhs) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::vector<std::vector<double>> orig_m = m;
    std::vector<double> orig_rhs = rhs;

    for (std::size_t k = 0; k < cols; ++k) {
        double nrm = 0.0;
        for (std::size_t r = k; r < rows; ++r) nrm += m[r][k] * m[r][k];
        nrm = std::sqrt(nrm);
        if (nrm == 0.0) throw NumericalError("lstsq: rank-deficient system");
        const double alpha = m[k][k] >= 0.0 ? -nrm : nrm;
        std::vector<double> w(rows, 0.0);
        w[k] = m[k][k] - alpha;
        for (std::size_t r = k + 1; r < rows; ++r) w[r] = m[r][k];
        double wn = 0.0;
        for (std::size_t r = k; r < rows; ++r) wn += w[r] * w[r];
        if (wn == 0.0) continue;
        for (std::size_t c = k; c < cols; ++c) {
            double dotv = 0.0;
            for (std::size_t r = k; r < rows; ++r) dotv += w[r] * m[r][c];
            const double f = 2.0 * dotv / wn;
            for (std::size_t r = k; r < rows; ++r) m[r][c] -= f * w[r];
        }
        double dotb = 0.0;
        for (std::size_t r = k; r < rows; ++r) dotb += w[r] * rhs[r];
        const double fb = 2.0 * dotb / wn;
        for (std::size_t r = k; r < rows; ++r) rhs[r] -= fb * w[r];
    }

    std::vector<double> x(cols, 0.0);
    for (std::size_t kk = cols; kk-- > 0;) {
        double s = rhs[kk];
        for (std::size_t c = kk + 1; c < cols; ++c) s -= m[kk][c] * x[c];
        if (m[kk][kk] == 0.0) throw NumericalError("lstsq: singular triangular factor");
        x[kk] = s / m[kk][kk];
    }

    double res = 0.0;
    for (std::size_t r = 0; r < rows; ++r) {
        double v = -orig_rhs[r];
        for (std::size_t c = 0; c < cols; ++c) v += orig_m[r][c] * x[c];
        res = std::max(res, std::abs(v));
    }
    return {std::move(x), res};
}

// Homogeneous trivariate polynomial with complex coefficients, simplex
// storage matching TrivariatePoly. Internal to the exact determinant oracle.
struct CPoly {
    int deg;
    std::vector<cplx> c;

    explicit CPoly(int d) : deg(d), c(std::size_t(d + 1) * std::size_t(d + 2) / 2, cplx(0.0)) {}
};

CPoly mul_linear(const CPoly& p, const std::array<cplx, 3>& lin) {
    CPoly out(p.deg + 1);
    std::size_t idx = 0;
    for (int i = 0; i <= p.deg; ++i) {
        for (int j = 0; j <= p.deg - i; ++j, ++idx) {
            const cplx v = p.c[idx];
            if (v == cplx(0.0)) continue;
            if (lin[0] != cplx(0.0))
                out.c[TrivariatePoly::index(out.deg, i + 1, j)] += lin[0] * v;
            if (lin[1] != cplx(0.0))
                out.c[TrivariatePoly::index(out.deg, i, j + 1)] += lin[1] * v;
            if (lin[2] != cplx(0.0))
                out.c[TrivariatePoly::index(out.deg, i, j)] += lin[2] * v;
        }
    }
    return out;
}

void add_into(CPoly& acc, const CPoly& p, double sign) {
    for (std::size_t t = 0; t < acc.c.size(); ++t) acc.c[t] += sign * p.c[t];
}

// Determinant by cofactor expansion along the first remaining row.
CPoly det_rec(const std::vector<std::array<cplx, 3>>& entry, std::size_t n,
              std::vector<int>& cols, std::size_t row) {
    if (cols.empty()) {
        CPoly one(0);
        one.c[0] = 1.0;
        return one;
    }
    CPoly acc(int(cols.size()));
    for (std::size_t t = 0; t < cols.size(); ++t) {
        const int col = cols[t];
        const auto& lin = entry[row * n + std::size_t(col)];
        if (lin[0] == cplx(0.0) && lin[1] == cplx(0.0) && lin[2] == cplx(0.0)) continue;
        cols.erase(cols.begin() + std::ptrdiff_t(t));
        const CPoly minor = det_rec(entry, n, cols, row + 1);
        cols.insert(cols.begin() + std::ptrdiff_t(t), col);
        add_into(acc, mul_linear(minor, lin), (t % 2 == 0) ? 1.0 : -1.0);
    }
    return acc;
}

}  // namespace

std::vector<double> char_coeffs_along(const ComplexMatrix& a, double theta) {
    const EigenDecomposition ed = eig_hermitian(rotated_re(a, theta));
    const std::size_t n = a.dim();
    std::vector<double> e(n + 1, 0.0);
    e[0] = 1.0;
    std::size_t used = 0;
    for (double lam : ed.values) {
        ++used;
        for (std::size_t k = used; k >= 1; --k) e[k] += lam * e[k - 1];
    }
    return e;
}

TrivariatePoly kippenhahn_poly(const ComplexMatrix& a) {
    const int n = int(a.dim());
    const int nfit = 4 * n + 1;
    const double step = 2.0 * std::numbers::pi / double(nfit);

    std::vector<std::vector<double>> samples(nfit);
    detail::parallel_for(std::size_t(nfit),
                         [&](std::size_t m) { samples[m] = char_coeffs_along(a, double(m) * step); });

    TrivariatePoly p(n);
    p.set_coeff(0, 0, n, 1.0);
    for (int d = 1; d <= n; ++d) {
        std::vector<std::vector<double>> basis(nfit, std::vector<double>(d + 1, 0.0));
        std::vector<double> rhs(nfit, 0.0);
        double rhs_max = 0.0;
        for (int m = 0; m < nfit; ++m) {
            const double th = double(m) * step;
            const double c = std::cos(th);
            const double s = std::sin(th);
            std::vector<double> cp(d + 1), sp(d + 1);
            cp[0] = 1.0;
            sp[0] = 1.0;
            for (int t = 1; t <= d; ++t) {
                cp[t] = cp[t - 1] * c;
                sp[t] = sp[t - 1] * s;
            }
            for (int i = 0; i <= d; ++i) basis[m][i] = cp[i] * sp[d - i];
            rhs[m] = samples[m][d];
            rhs_max = std::max(rhs_max, std::abs(rhs[m]));
        }
        LstsqResult fit = lstsq(std::move(basis), std::move(rhs));
        if (fit.residual_inf > 1e-6 * (1.0 + rhs_max)) {
            std::ostringstream os;
            os << "kippenhahn_poly: ill-conditioned fit at degree " << d
               << " (residual " << fit.residual_inf << ")";
            throw NumericalError(os.str());
        }
        for (int i = 0; i <= d; ++i) p.set_coeff(i, d - i, n - d, fit.x[i]);
    }
    return p;
}

TrivariatePoly kippenhahn_poly_exact(const ComplexMatrix& a) {
    const std::size_t n = a.dim();
    if (n > 8) throw InputError("kippenhahn_poly_exact: n > 8 not supported");

    const HermitianMatrix re = re_part(a);
    const HermitianMatrix im = im_part(a);
    std::vector<std::array<cplx, 3>> entry(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            entry[i * n + j] = {re(i, j), im(i, j), i == j ? cplx(1.0) : cplx(0.0)};

    std::vector<int> cols(n);
    for (std::size_t t = 0; t < n; ++t) cols[t] = int(t);
    const CPoly det = det_rec(entry, n, cols, 0);

    double max_abs = 0.0, max_imag = 0.0;
    for (const cplx& v : det.c) {
        max_abs = std::max(max_abs, std::abs(v));
        max_imag = std::max(max_imag, std::abs(v.imag()));
    }
    if (max_imag > 1e-9 * std::max(max_abs, 1e-300)) {
        std::ostringstream os;
        os << "kippenhahn_poly_exact: imaginary residue " << max_imag
           << " exceeds tolerance (max coefficient " << max_abs << ")";
        throw NumericalError(os.str());
    }

    TrivariatePoly p(static_cast<int>(n));
    std::size_t idx = 0;
    for (int i = 0; i <= int(n); ++i)
        for (int j = 0; j <= int(n) - i; ++j, ++idx)
            p.set_coeff(i, j, int(n) - i - j, det.c[idx].real());
    return p;
}

}  // namespace hrnr
