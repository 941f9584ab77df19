#pragma once

// Shared fixture matrices and small deterministic generators for the tests.

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "hrnr/complex_matrix.hpp"
#include "hrnr/hermitian_eigen.hpp"

namespace fixtures {

using hrnr::ComplexMatrix;
using hrnr::cplx;

/// 3x3 nilpotent with superdiagonal (s1, s2).
inline ComplexMatrix superdiag3(double s1, double s2) {
    ComplexMatrix a(3);
    a(0, 1) = s1;
    a(1, 2) = s2;
    return a;
}

inline ComplexMatrix diag(const std::vector<cplx>& d) {
    return ComplexMatrix::diagonal(std::span<const cplx>(d.data(), d.size()));
}

/// diag(1, i, -1, -i, 1/2, i/2, -1/2, -i/2, (1+i)/3).
inline ComplexMatrix example9() {
    const cplx i(0.0, 1.0);
    return diag({1.0, i, -1.0, -i, 0.5, 0.5 * i, -0.5, -0.5 * i, (1.0 + i) / 3.0});
}

/// 4x4 upper triangular whose rank-2 range has exactly two corners around
/// which the sampled half-plane boundaries are not supporting lines.
inline ComplexMatrix corner4() {
    const double r2 = std::sqrt(2.0);
    ComplexMatrix a(4);
    a(0, 0) = -1.0 / r2;
    a(0, 1) = -0.5;
    a(0, 2) = 1.0 / (2.0 * r2);
    a(0, 3) = 0.25;
    a(1, 1) = -1.0 / r2;
    a(1, 2) = -0.5;
    a(1, 3) = -1.0 / (2.0 * r2);
    a(2, 2) = 1.0 / r2;
    a(2, 3) = -0.5;
    a(3, 3) = 1.0 / r2;
    return a;
}

inline ComplexMatrix random_matrix(std::mt19937_64& rng, std::size_t n) {
    std::normal_distribution<double> g(0.0, 1.0);
    ComplexMatrix a(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = cplx(g(rng), g(rng));
    return a;
}

/// Random unitary via modified Gram-Schmidt on a Gaussian matrix.
inline ComplexMatrix random_unitary(std::mt19937_64& rng, std::size_t n) {
    ComplexMatrix m = random_matrix(rng, n);
    for (std::size_t c = 0; c < n; ++c) {
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t prev = 0; prev < c; ++prev) {
                cplx proj = 0.0;
                for (std::size_t r = 0; r < n; ++r) proj += std::conj(m(r, prev)) * m(r, c);
                for (std::size_t r = 0; r < n; ++r) m(r, c) -= proj * m(r, prev);
            }
        }
        double nrm = 0.0;
        for (std::size_t r = 0; r < n; ++r) nrm += std::norm(m(r, c));
        nrm = std::sqrt(nrm);
        for (std::size_t r = 0; r < n; ++r) m(r, c) /= nrm;
    }
    return m;
}

inline ComplexMatrix conjugate(const ComplexMatrix& u, const ComplexMatrix& a) {
    return u.adjoint() * (a * u);
}

inline ComplexMatrix random_normal_matrix(std::mt19937_64& rng, std::size_t n,
                                          std::vector<cplx>* eigenvalues = nullptr) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<cplx> d(n);
    for (auto& v : d) v = cplx(u(rng), u(rng));
    if (eigenvalues) *eigenvalues = d;
    const ComplexMatrix q = random_unitary(rng, n);
    return conjugate(q, ComplexMatrix::diagonal(std::span<const cplx>(d.data(), d.size())));
}

}  // namespace fixtures
