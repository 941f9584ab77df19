#pragma once

#include <vector>

#include "hrnr/complex_matrix.hpp"

namespace hrnr {

/// Eigenvalues sorted descending; column j of `vectors` is a unit eigenvector
/// for values[j]. Columns are pairwise orthonormal and each column's phase is
/// fixed so its largest-modulus component is real positive.
struct EigenDecomposition {
    std::vector<double> values;
    ComplexMatrix vectors;
};

/// Cyclic complex Jacobi eigensolver for Hermitian matrices.
///
/// Deterministic: fixed sweep order, ties between equal eigenvalues keep the
/// rotation output order (stable sort), eigenvector phases are normalized.
/// Convergence: off-diagonal Frobenius norm below 1e-13 * ||H||_F.
/// Throws NumericalError when the sweep cap is exceeded, reporting the
/// achieved off-diagonal norm (and the matrix itself for small n).
EigenDecomposition eig_hermitian(const HermitianMatrix& h, int max_sweeps = 30);

}  // namespace hrnr
