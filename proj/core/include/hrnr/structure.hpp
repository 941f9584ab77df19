#pragma once

#include <optional>
#include <vector>

#include "hrnr/complex_matrix.hpp"
#include "hrnr/ranges.hpp"

namespace hrnr {

/// (a x + b y + z)^m divides the Kippenhahn polynomial.
struct LinearFactor {
    double a;
    double b;
    int multiplicity;
};

/// All real linear factors of p_A with multiplicities. Candidates are pairs of
/// eigenvalues of Re A and Im A (any factor point a+bi must have a in
/// spec(Re A) and b in spec(Im A)); each candidate's multiplicity is the
/// minimum over a 64-angle grid of per-angle z-root multiplicities of p_A.
std::vector<LinearFactor> real_linear_factors(const ComplexMatrix& a);

/// The V_l sets for l = 1..floor(n/2), plus the content of the top range
/// Lambda_{floor(n/2)+1} (empty or a single point). Mutually disjoint; their
/// union is the set of linear-factor points.
struct VSets {
    std::vector<std::vector<cplx>> sets;
    std::optional<cplx> top;
};

VSets v_sets(const ComplexMatrix& a, int grid = kDefaultGrid);

/// True iff the linear-factor multiplicities sum to n. Cross-checked against
/// the commutator criterion ||A*A - AA*||_F <= 1e-10; disagreement raises
/// NumericalError (tolerance defect, not a silent state).
bool normality_test(const ComplexMatrix& a);

enum class Corollary2Verdict { unitarily_equivalent, not_equivalent, not_applicable };

const char* to_string(Corollary2Verdict v);

/// Special-class unitary equivalence: applicable when n == 2 (complete 2x2
/// unitary invariants), both matrices are normal (eigenvalue multisets), or
/// both are companion matrices (characteristic polynomials, which must then be
/// equal).
Corollary2Verdict corollary2_check(const ComplexMatrix& a, const ComplexMatrix& b);

/// Residuals and verdicts for the three equivalence conditions:
///   (a) Lambda_k(A) = Lambda_k(B) for k = 1..floor(n/2)+1,
///   (b) p_A = p_B,
///   (c) the eigenvalues of Re(e^{-i theta} A) and Re(e^{-i theta} B) coincide
///       with multiplicities for all theta.
/// `consistent` records whether the three verdicts agree; a false value is a
/// reportable defect.
struct EquivalenceReport {
    bool cond_a = false;
    std::vector<double> cond_a_residuals;  // per k = 1..floor(n/2)+1
    bool cond_b = false;
    double cond_b_residual = 0.0;
    bool cond_c = false;
    double cond_c_residual = 0.0;
    bool consistent = false;
    int grid = 0;
    double tol_geo = 0.0;
    double tol_poly = 0.0;
};

EquivalenceReport theorem1_check(const ComplexMatrix& a, const ComplexMatrix& b,
                                 int grid = kDefaultGrid, double tol = 0.0);

namespace detail {

/// Eigenvalues of a (numerically) normal matrix via simultaneous
/// diagonalization of Re A and Im A.
std::vector<cplx> normal_eigenvalues(const ComplexMatrix& a);

double commutator_norm(const ComplexMatrix& a);

bool is_companion(const ComplexMatrix& a);

}  // namespace detail

}  // namespace hrnr
