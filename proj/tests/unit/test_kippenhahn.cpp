#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "hrnr/errors.hpp"
#include "hrnr/kippenhahn.hpp"
#include "hrnr/ranges.hpp"
#include "hrnr/trivariate_poly.hpp"
#include "test_matrices.hpp"
#include "test_poly.hpp"

using namespace hrnr;
using fixtures::superdiag3;

namespace {

TrivariatePoly superdiag3_poly() {
    // z^3 - (5/4) x^2 z - (5/4) y^2 z
    TrivariatePoly p(3);
    p.set_coeff(0, 0, 3, 1.0);
    p.set_coeff(2, 0, 1, -1.25);
    p.set_coeff(0, 2, 1, -1.25);
    return p;
}

TrivariatePoly z_xz_squared() {
    // z (x + z)^2 = z^3 + 2 x z^2 + x^2 z
    TrivariatePoly p(3);
    p.set_coeff(0, 0, 3, 1.0);
    p.set_coeff(1, 0, 2, 2.0);
    p.set_coeff(2, 0, 1, 1.0);
    return p;
}

TrivariatePoly z2_xz() {
    // z^2 (x + z) = z^3 + x z^2
    TrivariatePoly p(3);
    p.set_coeff(0, 0, 3, 1.0);
    p.set_coeff(1, 0, 2, 1.0);
    return p;
}

}  // namespace

TEST_CASE("char_coeffs_along examples") {
    const auto c = char_coeffs_along(superdiag3(1.0, 2.0), 0.0);
    REQUIRE(c.size() == 4);
    CHECK(c[0] == 1.0);
    CHECK(c[1] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(std::abs(c[1]) < 1e-12);
    CHECK(c[2] == doctest::Approx(-1.25).epsilon(1e-12));
    CHECK(std::abs(c[3]) < 1e-12);

    const auto z = char_coeffs_along(ComplexMatrix::zero(2), 1.234);
    CHECK(z[0] == 1.0);
    CHECK(z[1] == 0.0);
    CHECK(z[2] == 0.0);

    const auto id = char_coeffs_along(ComplexMatrix::identity(2), 0.0);
    CHECK(id[0] == doctest::Approx(1.0));
    CHECK(id[1] == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(id[2] == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("kippenhahn_poly recovers the displayed 3x3 polynomials") {
    const TrivariatePoly pa = kippenhahn_poly(superdiag3(1.0, 2.0));
    const PolyCompare eq = poly_equal(pa, superdiag3_poly(), 1e-9);
    CHECK(eq.equal);

    const TrivariatePoly p011 = kippenhahn_poly(fixtures::diag({0.0, 1.0, 1.0}));
    CHECK(poly_equal(p011, z_xz_squared(), 1e-9).equal);

    const TrivariatePoly p001 = kippenhahn_poly(fixtures::diag({0.0, 0.0, 1.0}));
    CHECK(poly_equal(p001, z2_xz(), 1e-9).equal);
}

TEST_CASE("kippenhahn_poly of the 9x9 diagonal equals the factored display") {
    // (x^2-z^2)(y^2-z^2)((1/4)x^2-z^2)((1/4)y^2-z^2)((1/3)x+(1/3)y+z) expands to
    // the product of (Re(l) x + Im(l) y + z) over the diagonal entries l.
    const TrivariatePoly expected = polytest::linear_product({{1.0, 0.0},
                                                              {0.0, 1.0},
                                                              {-1.0, 0.0},
                                                              {0.0, -1.0},
                                                              {0.5, 0.0},
                                                              {0.0, 0.5},
                                                              {-0.5, 0.0},
                                                              {0.0, -0.5},
                                                              {1.0 / 3.0, 1.0 / 3.0}});
    CHECK(expected.coeff(0, 0, 9) == doctest::Approx(1.0));  // already monic in z
    const TrivariatePoly p = kippenhahn_poly(fixtures::example9());
    const PolyCompare eq = poly_equal(p, expected, 1e-9);
    CHECK(eq.equal);
}

TEST_CASE("kippenhahn_poly_exact examples and oracle agreement") {
    const TrivariatePoly pi2 = kippenhahn_poly_exact(ComplexMatrix::identity(2));
    TrivariatePoly want(2);  // (x + z)^2
    want.set_coeff(0, 0, 2, 1.0);
    want.set_coeff(1, 0, 1, 2.0);
    want.set_coeff(2, 0, 0, 1.0);
    CHECK(poly_equal(pi2, want, 1e-12).equal);

    const TrivariatePoly p001 = kippenhahn_poly_exact(fixtures::diag({0.0, 0.0, 1.0}));
    CHECK(poly_equal(p001, z2_xz(), 1e-12).equal);

    std::mt19937_64 rng(202);
    const ComplexMatrix a = fixtures::random_matrix(rng, 5);
    const TrivariatePoly fit = kippenhahn_poly(a);
    const TrivariatePoly exact = kippenhahn_poly_exact(a);
    const PolyCompare eq = poly_equal(fit, exact, 0.0);
    CHECK(eq.residual <= 1e-9 * (1.0 + exact.max_abs_coeff()));

    CHECK_THROWS_AS(kippenhahn_poly_exact(ComplexMatrix::zero(9)), InputError);
}

TEST_CASE("poly_eval") {
    const TrivariatePoly p = superdiag3_poly();
    CHECK(std::abs(p.eval(1.0, 0.0, std::sqrt(5.0) / 2.0)) <= 1e-12);
    CHECK(p.eval(0.0, 0.0, 1.0) == 1.0);

    std::mt19937_64 rng(203);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int t = 0; t < 10; ++t) {
        const double x = u(rng), y = u(rng), z = u(rng);
        // powers of two scale exactly
        CHECK(p.eval(2 * x, 2 * y, 2 * z) == 8.0 * p.eval(x, y, z));
        const double s = 1.37;
        const double lhs = p.eval(s * x, s * y, s * z);
        const double rhs = s * s * s * p.eval(x, y, z);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
}

TEST_CASE("poly_equal") {
    const TrivariatePoly pa = kippenhahn_poly(superdiag3(1.0, 2.0));
    const TrivariatePoly pb = kippenhahn_poly(superdiag3(2.0, 1.0));
    CHECK(poly_equal(pa, pb, 1e-9).equal);

    CHECK_FALSE(poly_equal(z_xz_squared(), z2_xz(), 1e-9).equal);

    const PolyCompare self = poly_equal(pa, pa, 0.0);
    CHECK(self.equal);
    CHECK(self.residual == 0.0);

    TrivariatePoly other_degree(2);
    CHECK_FALSE(poly_equal(pa, other_degree, 1e-3).equal);
    CHECK(std::isinf(poly_equal(pa, other_degree, 1e-3).residual));
}

TEST_CASE("z_root_multiplicity on z(x+z)^2") {
    const TrivariatePoly p = z_xz_squared();
    CHECK(z_root_multiplicity(p, 0.0, -1.0, 1e-7) == 2);
    CHECK(z_root_multiplicity(p, 0.0, 0.0, 1e-7) == 1);
    CHECK(z_root_multiplicity(p, 0.0, 0.5, 1e-7) == 0);
}

TEST_CASE("root consistency between the polynomial and the support sweep") {
    std::mt19937_64 rng(204);
    const ComplexMatrix a = fixtures::random_matrix(rng, 4);
    const TrivariatePoly p = kippenhahn_poly(a);
    const double fro = frobenius_norm(a);
    const double bound = 1e-8 * std::pow(1.0 + fro, a.dim());
    const detail::ProfileTable t = detail::build_profile_table(a, 64);
    for (int j = 0; j < t.grid; ++j)
        for (std::size_t k = 0; k < a.dim(); ++k) {
            const double th = t.thetas[std::size_t(j)];
            CHECK(std::abs(p.eval(std::cos(th), std::sin(th), -t.alpha[k][std::size_t(j)])) <=
                  bound);
        }
}

TEST_CASE("z-slice coefficients match the eigenvalue multiset encoding") {
    std::mt19937_64 rng(205);
    const ComplexMatrix a = fixtures::random_matrix(rng, 5);
    const TrivariatePoly p = kippenhahn_poly(a);
    const int n = int(a.dim());
    for (int j = 0; j < 16; ++j) {
        const double th = 2.0 * std::numbers::pi * double(j) / 16.0;
        const auto cd = char_coeffs_along(a, th);          // c_d multiplies z^{n-d}
        const auto zc = p.z_coeffs_at(std::cos(th), std::sin(th));  // a_k multiplies z^k
        for (int d = 0; d <= n; ++d)
            CHECK(zc[std::size_t(n - d)] ==
                  doctest::Approx(cd[std::size_t(d)]).epsilon(1e-9).scale(1.0 + std::abs(cd[std::size_t(d)])));
    }
}

TEST_CASE("unitary invariance of the Kippenhahn polynomial") {
    std::mt19937_64 rng(206);
    const ComplexMatrix a = fixtures::random_matrix(rng, 5);
    const ComplexMatrix u = fixtures::random_unitary(rng, 5);
    const TrivariatePoly p1 = kippenhahn_poly(a);
    const TrivariatePoly p2 = kippenhahn_poly(fixtures::conjugate(u, a));
    const PolyCompare eq = poly_equal(p1, p2, 0.0);
    CHECK(eq.residual <= 1e-9 * (1.0 + p1.max_abs_coeff()));
}

TEST_CASE("translation rule p_{A+cI}(x,y,z) = p_A(x,y,z + x Re c + y Im c)") {
    std::mt19937_64 rng(207);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const ComplexMatrix a = fixtures::random_matrix(rng, 4);
    for (int t = 0; t < 3; ++t) {
        const cplx c(u(rng), u(rng));
        const ComplexMatrix shifted = a + c * ComplexMatrix::identity(4);
        const TrivariatePoly lhs = kippenhahn_poly(shifted);
        const TrivariatePoly rhs = polytest::shift_z(kippenhahn_poly(a), c.real(), c.imag());
        const PolyCompare eq = poly_equal(lhs, rhs, 1e-8);
        CHECK(eq.equal);
    }
}
