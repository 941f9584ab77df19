#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace hrnr {

using cplx = std::complex<double>;

/// Dense n-by-n complex matrix, row-major storage.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t n) : n_(n), a_(n * n) {}

    static ComplexMatrix zero(std::size_t n) { return ComplexMatrix(n); }
    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix diagonal(std::span<const cplx> entries);

    std::size_t dim() const { return n_; }

    cplx& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    bool all_finite() const;

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;

    friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
    friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
    friend ComplexMatrix operator*(const cplx& s, const ComplexMatrix& a);

private:
    std::size_t n_ = 0;
    std::vector<cplx> a_;
};

double frobenius_norm(const ComplexMatrix& a);

cplx trace(const ComplexMatrix& a);

/// Hermitian matrix. Mirror entries are exact conjugates and diagonal imaginary
/// parts are exactly zero, by construction.
class HermitianMatrix {
public:
    /// Symmetrizes m by averaging mirror entries.
    static HermitianMatrix symmetrized(const ComplexMatrix& m);

    std::size_t dim() const { return m_.dim(); }
    const ComplexMatrix& matrix() const { return m_; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

private:
    explicit HermitianMatrix(ComplexMatrix m) : m_(std::move(m)) {}
    ComplexMatrix m_;

    friend HermitianMatrix re_part(const ComplexMatrix&);
    friend HermitianMatrix im_part(const ComplexMatrix&);
    friend HermitianMatrix rotated_re(const ComplexMatrix&, double);
};

/// (A + A*)/2.
HermitianMatrix re_part(const ComplexMatrix& a);

/// (A - A*)/(2i).
HermitianMatrix im_part(const ComplexMatrix& a);

/// cos(theta)*Re A + sin(theta)*Im A, identical to Re(e^{-i theta} A).
HermitianMatrix rotated_re(const ComplexMatrix& a, double theta);

/// Real quadratic form <H v, v> of a Hermitian matrix at a vector.
double quadratic_form(const HermitianMatrix& h, std::span<const cplx> v);

}  // namespace hrnr
