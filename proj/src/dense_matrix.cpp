#include "glt/dense_matrix.hpp"

#include <cmath>
#include <limits>

namespace glt {

namespace {

bool finite(const cplx& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != rows_ * cols_)
        throw DimensionError("entry count " + std::to_string(a_.size()) + " does not match " +
                             std::to_string(rows_) + "x" + std::to_string(cols_));
    for (const cplx& z : a_)
        if (!finite(z)) throw NumericError("non-finite matrix entry rejected");
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

cplx DenseMatrix::trace() const {
    cplx t = 0.0;
    std::size_t n = rows_ < cols_ ? rows_ : cols_;
    for (std::size_t i = 0; i < n; ++i) t += (*this)(i, i);
    return t;
}

double DenseMatrix::frobenius_norm_sq() const {
    double s = 0.0;
    for (const cplx& z : a_) s += z.real() * z.real() + z.imag() * z.imag();
    return s;
}

double DenseMatrix::frobenius_norm() const { return std::sqrt(frobenius_norm_sq()); }

double DenseMatrix::max_abs() const {
    double m = 0.0;
    for (const cplx& z : a_) m = std::max(m, std::abs(z));
    return m;
}

DenseMatrix DenseMatrix::adjoint() const {
    DenseMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = std::conj((*this)(i, j));
    return r;
}

bool DenseMatrix::is_hermitian_exact() const {
    if (!square()) return false;
    for (std::size_t i = 0; i < rows_; ++i) {
        if ((*this)(i, i).imag() != 0.0) return false;
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != std::conj((*this)(j, i))) return false;
    }
    return true;
}

bool DenseMatrix::is_real_symmetric_tridiagonal() const {
    if (!square()) return false;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            const cplx& z = (*this)(i, j);
            if (z.imag() != 0.0) return false;
            std::size_t d = i > j ? i - j : j - i;
            if (d > 1 && z.real() != 0.0) return false;
        }
        if (i + 1 < rows_ && (*this)(i, i + 1) != (*this)(i + 1, i)) return false;
    }
    return true;
}

bool DenseMatrix::is_hermitian(double tol) const {
    if (!square()) return false;
    double defect = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) {
        double di = (*this)(i, i).imag();
        defect += 2.0 * di * di;
        for (std::size_t j = i + 1; j < cols_; ++j) {
            cplx d = (*this)(i, j) - std::conj((*this)(j, i));
            defect += 2.0 * std::norm(d);
        }
    }
    return std::sqrt(defect) <= tol;
}

DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("shape mismatch in +");
    DenseMatrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) + b(i, j);
    return r;
}

DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("shape mismatch in -");
    DenseMatrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) - b(i, j);
    return r;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionError("shape mismatch in matrix product");
    DenseMatrix r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            cplx aik = a(i, k);
            if (aik == cplx(0.0, 0.0)) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) += aik * b(k, j);
        }
    }
    return r;
}

DenseMatrix operator*(cplx s, const DenseMatrix& a) {
    DenseMatrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = s * a(i, j);
    return r;
}

DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b) {
    const std::size_t ra = a.rows(), ca = a.cols(), rb = b.rows(), cb = b.cols();
    const std::size_t maxn = std::numeric_limits<std::size_t>::max();
    if (rb != 0 && ra > maxn / rb) throw DimensionError("kron row count overflow");
    if (cb != 0 && ca > maxn / cb) throw DimensionError("kron column count overflow");
    const std::size_t rr = ra * rb, rc = ca * cb;
    if (rc != 0 && rr > maxn / rc) throw DimensionError("kron entry count overflow");
    DenseMatrix r(rr, rc);
    for (std::size_t i = 0; i < ra; ++i)
        for (std::size_t j = 0; j < ca; ++j) {
            cplx aij = a(i, j);
            if (aij == cplx(0.0, 0.0)) continue;  // keep untouched zeros bit-clean
            for (std::size_t k = 0; k < rb; ++k)
                for (std::size_t l = 0; l < cb; ++l) r(i * rb + k, j * cb + l) = aij * b(k, l);
        }
    return r;
}

DenseMatrix direct_sum_pad(const DenseMatrix& a, std::size_t target) {
    if (!a.square()) throw DimensionError("direct_sum_pad requires a square matrix");
    if (target < a.rows())
        throw DimensionError("pad target " + std::to_string(target) + " smaller than matrix order " +
                             std::to_string(a.rows()));
    DenseMatrix r(target, target);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
    return r;
}

cplx frobenius_inner(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError("shape mismatch in frobenius_inner");
    cplx s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) s += std::conj(b(i, j)) * a(i, j);
    return s;
}

}  // namespace glt
