#include "hrnr/complex_matrix.hpp"

#include <cassert>
#include <cmath>

#include "hrnr/errors.hpp"

namespace hrnr {

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const cplx> entries) {
    ComplexMatrix m(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
    return m;
}

bool ComplexMatrix::all_finite() const {
    for (const cplx& v : a_)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix r(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) r(j, i) = std::conj((*this)(i, j));
    return r;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix r(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    assert(a.n_ == b.n_);
    ComplexMatrix r(a.n_);
    for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = a.a_[i] + b.a_[i];
    return r;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    assert(a.n_ == b.n_);
    ComplexMatrix r(a.n_);
    for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = a.a_[i] - b.a_[i];
    return r;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    assert(a.n_ == b.n_);
    const std::size_t n = a.n_;
    ComplexMatrix r(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx(0.0, 0.0)) continue;
            for (std::size_t j = 0; j < n; ++j) r(i, j) += aik * b(k, j);
        }
    return r;
}

ComplexMatrix operator*(const cplx& s, const ComplexMatrix& a) {
    ComplexMatrix r(a.n_);
    for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = s * a.a_[i];
    return r;
}

double frobenius_norm(const ComplexMatrix& a) {
    double s = 0.0;
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

cplx trace(const ComplexMatrix& a) {
    cplx t = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) t += a(i, i);
    return t;
}

HermitianMatrix HermitianMatrix::symmetrized(const ComplexMatrix& m) {
    const std::size_t n = m.dim();
    ComplexMatrix h(n);
    for (std::size_t i = 0; i < n; ++i) {
        h(i, i) = cplx(m(i, i).real(), 0.0);
        for (std::size_t j = i + 1; j < n; ++j) {
            const cplx v = 0.5 * (m(i, j) + std::conj(m(j, i)));
            h(i, j) = v;
            h(j, i) = std::conj(v);
        }
    }
    return HermitianMatrix(std::move(h));
}

HermitianMatrix re_part(const ComplexMatrix& a) {
    const std::size_t n = a.dim();
    ComplexMatrix h(n);
    for (std::size_t i = 0; i < n; ++i) {
        h(i, i) = cplx(a(i, i).real(), 0.0);
        for (std::size_t j = i + 1; j < n; ++j) {
            const cplx v = 0.5 * (a(i, j) + std::conj(a(j, i)));
            h(i, j) = v;
            h(j, i) = std::conj(v);
        }
    }
    return HermitianMatrix(std::move(h));
}

HermitianMatrix im_part(const ComplexMatrix& a) {
    const std::size_t n = a.dim();
    const cplx two_i(0.0, 2.0);
    ComplexMatrix h(n);
    for (std::size_t i = 0; i < n; ++i) {
        h(i, i) = cplx(a(i, i).imag(), 0.0);
        for (std::size_t j = i + 1; j < n; ++j) {
            const cplx v = (a(i, j) - std::conj(a(j, i))) / two_i;
            h(i, j) = v;
            h(j, i) = std::conj(v);
        }
    }
    return HermitianMatrix(std::move(h));
}

HermitianMatrix rotated_re(const ComplexMatrix& a, double theta) {
    if (!std::isfinite(theta)) throw InputError("rotated_re: non-finite angle");
    const HermitianMatrix re = re_part(a);
    const HermitianMatrix im = im_part(a);
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const std::size_t n = a.dim();
    ComplexMatrix h(n);
    for (std::size_t i = 0; i < n; ++i) {
        h(i, i) = cplx(c * re(i, i).real() + s * im(i, i).real(), 0.0);
        for (std::size_t j = i + 1; j < n; ++j) {
            const cplx v = c * re(i, j) + s * im(i, j);
            h(i, j) = v;
            h(j, i) = std::conj(v);
        }
    }
    return HermitianMatrix(std::move(h));
}

double quadratic_form(const HermitianMatrix& h, std::span<const cplx> v) {
    const std::size_t n = h.dim();
    assert(v.size() == n);
    cplx acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        cplx row = 0.0;
        for (std::size_t j = 0; j < n; ++j) row += h(i, j) * v[j];
        acc += std::conj(v[i]) * row;
    }
    return acc.real();
}

}  // namespace hrnr
