#pragma once

#include <vector>

#include "hrnr/complex_matrix.hpp"
#include "hrnr/trivariate_poly.hpp"

namespace hrnr {

/// Coefficients c_d of z^{n-d}, d = 0..n, of det(Re(e^{-i theta} A) + z I),
/// computed as elementary symmetric functions of the eigenvalues. c_0 = 1.
std::vector<double> char_coeffs_along(const ComplexMatrix& a, double theta);

/// Kippenhahn polynomial det(x Re A + y Im A + z I), recovered degree block by
/// degree block from char_coeffs_along samples at 4n+1 equispaced angles via
/// least squares. Monic in z. Throws NumericalError when a degree block's fit
/// residual is out of tolerance.
TrivariatePoly kippenhahn_poly(const ComplexMatrix& a);

/// Exact-expansion oracle: cofactor expansion of det(x Re A + y Im A + z I)
/// over the trivariate polynomial ring with complex coefficients. The
/// imaginary residue must vanish (relative 1e-9) before it is discarded.
/// Requires n <= 8.
TrivariatePoly kippenhahn_poly_exact(const ComplexMatrix& a);

}  // namespace hrnr
