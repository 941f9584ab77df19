#pragma once

#include <cstddef>
#include <vector>

namespace hrnr {

/// Real homogeneous trivariate polynomial of fixed degree n.
///
/// Coefficients are stored densely over the simplex {(i,j,k) : i+j+k = n},
/// ordered lexicographically in (i,j). A Kippenhahn polynomial is monic in z:
/// coeff(0,0,n) == 1.
class TrivariatePoly {
public:
    explicit TrivariatePoly(int degree);

    int degree() const { return degree_; }
    std::size_t size() const { return coeffs_.size(); }

    double coeff(int i, int j, int k) const;
    void set_coeff(int i, int j, int k, double c);

    const std::vector<double>& coeffs() const { return coeffs_; }

    /// Coefficients a_k of z^k in p(x0, y0, z), k = 0..degree.
    std::vector<double> z_coeffs_at(double x0, double y0) const;

    /// Horner-style evaluation (collapse to a z-polynomial, then Horner).
    double eval(double x, double y, double z) const;

    double max_abs_coeff() const;

    static std::size_t index(int degree, int i, int j);

private:
    int degree_ = 0;
    std::vector<double> coeffs_;
};

struct PolyCompare {
    bool equal;
    double residual;  // max coefficient deviation; +inf on degree mismatch
};

/// Coefficient-wise comparison: equal iff the max deviation is at most
/// tol * (1 + max coefficient magnitude of either polynomial).
PolyCompare poly_equal(const TrivariatePoly& p, const TrivariatePoly& q, double tol);

/// Largest m such that the first m z-derivatives of p(cos theta, sin theta, z)
/// vanish at z = t, each tested against tol times a scale built from that
/// derivative's coefficient magnitudes. Returns 0 when t is not a root.
int z_root_multiplicity(const TrivariatePoly& p, double theta, double t, double tol);

}  // namespace hrnr
