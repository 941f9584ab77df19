#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "hrnr/complex_matrix.hpp"
#include "hrnr/errors.hpp"
#include "hrnr/hermitian_eigen.hpp"
#include "test_matrices.hpp"

using namespace hrnr;
using fixtures::superdiag3;

namespace {

ComplexMatrix jordan2() {
    ComplexMatrix a(2);
    a(0, 1) = 1.0;
    return a;
}

}  // namespace

TEST_CASE("re_part basic examples") {
    const HermitianMatrix r = re_part(jordan2());
    CHECK(r(0, 0) == cplx(0.0, 0.0));
    CHECK(r(0, 1) == cplx(0.5, 0.0));
    CHECK(r(1, 0) == cplx(0.5, 0.0));

    // a Hermitian matrix is a fixed point, bitwise
    ComplexMatrix h(2);
    h(0, 0) = 2.0;
    h(1, 1) = -1.0;
    h(0, 1) = cplx(0.25, 0.75);
    h(1, 0) = std::conj(h(0, 1));
    const HermitianMatrix rh = re_part(h);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) CHECK(rh(i, j) == h(i, j));

    // i*I is purely skew-Hermitian
    const ComplexMatrix ii = cplx(0.0, 1.0) * ComplexMatrix::identity(2);
    const HermitianMatrix ri = re_part(ii);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) CHECK(ri(i, j) == cplx(0.0, 0.0));
}

TEST_CASE("im_part basic examples") {
    const ComplexMatrix ii = cplx(0.0, 1.0) * ComplexMatrix::identity(2);
    const HermitianMatrix im_ii = im_part(ii);
    CHECK(im_ii(0, 0) == cplx(1.0, 0.0));
    CHECK(im_ii(1, 1) == cplx(1.0, 0.0));
    CHECK(im_ii(0, 1) == cplx(0.0, 0.0));

    ComplexMatrix sym(2);
    sym(0, 0) = 1.0;
    sym(0, 1) = 2.0;
    sym(1, 0) = 2.0;
    sym(1, 1) = -3.0;
    const HermitianMatrix im_sym = im_part(sym);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) CHECK(im_sym(i, j) == cplx(0.0, 0.0));

    const HermitianMatrix im_j = im_part(jordan2());
    CHECK(im_j(0, 1) == cplx(0.0, -0.5));
    CHECK(im_j(1, 0) == cplx(0.0, 0.5));
}

TEST_CASE("reconstruction A = Re A + i Im A") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 8; ++trial) {
        const ComplexMatrix a = fixtures::random_matrix(rng, 5);
        const ComplexMatrix rec =
            re_part(a).matrix() + cplx(0.0, 1.0) * im_part(a).matrix();
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = 0; j < 5; ++j)
                CHECK(std::abs(rec(i, j) - a(i, j)) <=
                      4.0 * 1e-16 * (1.0 + std::abs(a(i, j))));
    }
}

TEST_CASE("rotated_re at axis angles") {
    std::mt19937_64 rng(102);
    const ComplexMatrix a = fixtures::random_matrix(rng, 4);
    const HermitianMatrix re = re_part(a);
    const HermitianMatrix im = im_part(a);
    const double scale = 1.0 + frobenius_norm(a);

    const HermitianMatrix r0 = rotated_re(a, 0.0);
    const HermitianMatrix r90 = rotated_re(a, std::acos(-1.0) / 2.0);
    const HermitianMatrix r180 = rotated_re(a, std::acos(-1.0));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            CHECK(std::abs(r0(i, j) - re(i, j)) <= 1e-15 * scale);
            CHECK(std::abs(r90(i, j) - im(i, j)) <= 1e-15 * scale);
            CHECK(std::abs(r180(i, j) + re(i, j)) <= 1e-15 * scale);
        }
}

TEST_CASE("frobenius_norm examples") {
    CHECK(frobenius_norm(ComplexMatrix::identity(3)) == doctest::Approx(std::sqrt(3.0)));
    CHECK(frobenius_norm(ComplexMatrix::zero(4)) == 0.0);
    CHECK(frobenius_norm(jordan2()) == 1.0);
}

TEST_CASE("eig_hermitian on a real diagonal matrix is exact") {
    std::vector<cplx> d = {1.0, 3.0, 2.0};
    const ComplexMatrix m = ComplexMatrix::diagonal(std::span<const cplx>(d.data(), d.size()));
    const EigenDecomposition ed = eig_hermitian(HermitianMatrix::symmetrized(m));
    CHECK(ed.values[0] == 3.0);
    CHECK(ed.values[1] == 2.0);
    CHECK(ed.values[2] == 1.0);
}

TEST_CASE("eig_hermitian on [[0,1],[1,0]]") {
    ComplexMatrix m(2);
    m(0, 1) = 1.0;
    m(1, 0) = 1.0;
    const EigenDecomposition ed = eig_hermitian(HermitianMatrix::symmetrized(m));
    CHECK(ed.values[0] == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(ed.values[1] == doctest::Approx(-1.0).epsilon(1e-13));
}

TEST_CASE("eig of Re A for the nilpotent 3x3 with superdiagonal (1,2)") {
    const EigenDecomposition ed = eig_hermitian(re_part(superdiag3(1.0, 2.0)));
    const double r = std::sqrt(5.0) / 2.0;
    CHECK(ed.values[0] == doctest::Approx(r).epsilon(1e-12));
    CHECK(ed.values[1] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(std::abs(ed.values[1]) < 1e-12);
    CHECK(ed.values[2] == doctest::Approx(-r).epsilon(1e-12));
}

TEST_CASE("eig residual, orthonormality and determinism") {
    std::mt19937_64 rng(103);
    for (int trial = 0; trial < 6; ++trial) {
        const std::size_t n = 2 + std::size_t(trial);
        const ComplexMatrix a = fixtures::random_matrix(rng, n);
        const HermitianMatrix h = re_part(a);
        const double fro = frobenius_norm(h.matrix());
        const EigenDecomposition ed = eig_hermitian(h);

        for (std::size_t k = 0; k < n; ++k) {
            double resid = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                cplx hv = 0.0;
                for (std::size_t j = 0; j < n; ++j) hv += h(i, j) * ed.vectors(j, k);
                resid += std::norm(hv - ed.values[k] * ed.vectors(i, k));
            }
            CHECK(std::sqrt(resid) <= 1e-11 * (1.0 + fro));
        }
        for (std::size_t c1 = 0; c1 < n; ++c1)
            for (std::size_t c2 = 0; c2 <= c1; ++c2) {
                cplx ip = 0.0;
                for (std::size_t r = 0; r < n; ++r)
                    ip += std::conj(ed.vectors(r, c1)) * ed.vectors(r, c2);
                const double want = c1 == c2 ? 1.0 : 0.0;
                CHECK(std::abs(ip - want) <= 1e-12);
            }

        const EigenDecomposition again = eig_hermitian(h);
        for (std::size_t k = 0; k < n; ++k) CHECK(again.values[k] == ed.values[k]);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) CHECK(again.vectors(i, j) == ed.vectors(i, j));
    }
}

TEST_CASE("eigenvalues are invariant under unitary conjugation") {
    std::mt19937_64 rng(104);
    const ComplexMatrix a = fixtures::random_matrix(rng, 6);
    const HermitianMatrix h = re_part(a);
    const ComplexMatrix u = fixtures::random_unitary(rng, 6);
    const HermitianMatrix hu = HermitianMatrix::symmetrized(fixtures::conjugate(u, h.matrix()));
    const EigenDecomposition e1 = eig_hermitian(h);
    const EigenDecomposition e2 = eig_hermitian(hu);
    const double fro = frobenius_norm(h.matrix());
    for (std::size_t k = 0; k < 6; ++k)
        CHECK(std::abs(e1.values[k] - e2.values[k]) <= 1e-10 * fro);
}

TEST_CASE("Weyl perturbation bound over rotation angles") {
    std::mt19937_64 rng(105);
    std::uniform_real_distribution<double> ang(0.0, 2.0 * std::acos(-1.0));
    const ComplexMatrix a = fixtures::random_matrix(rng, 5);
    const double fro = frobenius_norm(a);
    for (int trial = 0; trial < 20; ++trial) {
        const double t1 = ang(rng);
        const double t2 = ang(rng);
        const EigenDecomposition e1 = eig_hermitian(rotated_re(a, t1));
        const EigenDecomposition e2 = eig_hermitian(rotated_re(a, t2));
        const double lhs_bound =
            std::abs(std::exp(cplx(0.0, -t1)) - std::exp(cplx(0.0, -t2))) * fro;
        for (std::size_t k = 0; k < 5; ++k)
            CHECK(std::abs(e1.values[k] - e2.values[k]) <= lhs_bound + 1e-11 * (1.0 + fro));
    }
}

TEST_CASE("eig_hermitian reports non-convergence with the achieved off-norm") {
    ComplexMatrix m(2);
    m(0, 1) = 1.0;
    m(1, 0) = 1.0;
    CHECK_THROWS_AS(eig_hermitian(HermitianMatrix::symmetrized(m), 0), NumericalError);
    try {
        eig_hermitian(HermitianMatrix::symmetrized(m), 0);
    } catch (const NumericalError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("off-diagonal norm") != std::string::npos);
        CHECK(msg.find("matrix") != std::string::npos);
    }
}
