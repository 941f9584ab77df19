#include "hrnr/hermitian_eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "hrnr/errors.hpp"

namespace hrnr {

namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
    const std::size_t n = a.dim();
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) s += std::norm(a(i, j));
    return std::sqrt(2.0 * s);
}

std::string describe_failure(const ComplexMatrix& a, double off, double fro) {
    std::ostringstream os;
    os << "eig_hermitian: no convergence after sweep cap (n=" << a.dim()
       << ", off-diagonal norm=" << off << ", frobenius=" << fro << ")";
    if (a.dim() <= 8) {
        os << "; matrix:";
        for (std::size_t i = 0; i < a.dim(); ++i) {
            os << " [";
            for (std::size_t j = 0; j < a.dim(); ++j) {
                os << "(" << a(i, j).real() << "," << a(i, j).imag() << ")";
                if (j + 1 < a.dim()) os << " ";
            }
            os << "]";
        }
    }
    return os.str();
}

}  // namespace

EigenDecomposition eig_hermitian(const HermitianMatrix& h, int max_sweeps) {
    const std::size_t n = h.dim();
    ComplexMatrix a = h.matrix();
    ComplexMatrix v = ComplexMatrix::identity(n);

    const double fro = frobenius_norm(a);
    const double off_target = 1e-13 * fro;
    // entries below this cannot push the off-diagonal norm past the target
    const double skip = n > 0 ? off_target / double(n) : 0.0;

    double off = off_diagonal_norm(a);
    int sweep = 0;
    while (off > off_target) {
        if (sweep >= max_sweeps) throw NumericalError(describe_failure(a, off, fro));
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double g = std::abs(a(p, q));
                if (g <= skip) continue;
                const cplx u = a(p, q) / g;
                const double alpha = a(p, p).real();
                const double beta = a(q, q).real();
                const double tau = (beta - alpha) / (2.0 * g);
                const double sign = tau >= 0.0 ? 1.0 : -1.0;
                const double t = -sign / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                a(p, p) = cplx(c * c * alpha + 2.0 * s * c * g + s * s * beta, 0.0);
                a(q, q) = cplx(s * s * alpha - 2.0 * s * c * g + c * c * beta, 0.0);
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (std::size_t r = 0; r < n; ++r) {
                    if (r == p || r == q) continue;
                    const cplx xp = a(r, p);
                    const cplx xq = a(r, q);
                    const cplx np = c * xp + s * std::conj(u) * xq;
                    const cplx nq = -s * u * xp + c * xq;
                    a(r, p) = np;
                    a(r, q) = nq;
                    a(p, r) = std::conj(np);
                    a(q, r) = std::conj(nq);
                }
                for (std::size_t r = 0; r < n; ++r) {
                    const cplx xp = v(r, p);
                    const cplx xq = v(r, q);
                    v(r, p) = c * xp + s * std::conj(u) * xq;
                    v(r, q) = -s * u * xp + c * xq;
                }
            }
        }
        ++sweep;
        off = off_diagonal_norm(a);
    }

    std::vector<double> raw(n);
    for (std::size_t i = 0; i < n; ++i) raw[i] = a(i, i).real();

    // descending order; stable sort keeps the rotation output order for ties
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return raw[i] > raw[j]; });

    EigenDecomposition out;
    out.values.resize(n);
    out.vectors = ComplexMatrix(n);
    for (std::size_t jj = 0; jj < n; ++jj) {
        const std::size_t src = order[jj];
        out.values[jj] = raw[src];
        // phase: largest-modulus component made real positive (first index wins ties)
        std::size_t rmax = 0;
        double best = -1.0;
        for (std::size_t r = 0; r < n; ++r) {
            const double m = std::abs(v(r, src));
            if (m > best) {
                best = m;
                rmax = r;
            }
        }
        cplx phase(1.0, 0.0);
        if (best > 0.0) phase = std::conj(v(rmax, src)) / best;
        for (std::size_t r = 0; r < n; ++r) out.vectors(r, jj) = phase * v(r, src);
    }
    return out;
}

}  // namespace hrnr
