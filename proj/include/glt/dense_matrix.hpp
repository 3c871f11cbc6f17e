#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "glt/error.hpp"

namespace glt {

using cplx = std::complex<double>;

/// Dense complex matrix in row-major order. The universal carrier for all
/// structured matrices of the library (Toeplitz, diagonal samplers, locally
/// Toeplitz blocks, basis truncations, discretization matrices).
///
/// Values are immutable in spirit: builders fill entries once and afterwards
/// instances can be shared freely across threads. Constructors taking entry
/// data reject non-finite values.
class DenseMatrix {
  public:
    DenseMatrix() : rows_(0), cols_(0) {}

    /// Zero matrix of the given shape.
    DenseMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, cplx(0.0, 0.0)) {}

    /// Matrix from explicit row-major entries. Throws NumericError on NaN/Inf,
    /// DimensionError when the entry count does not match the shape.
    DenseMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);

    static DenseMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    cplx& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    const std::vector<cplx>& entries() const { return a_; }

    cplx trace() const;
    double frobenius_norm() const;
    double frobenius_norm_sq() const;
    double max_abs() const;

    DenseMatrix adjoint() const;

    /// Exact (bitwise) structural tests used to pick specialized solver paths.
    bool is_hermitian_exact() const;
    bool is_real_symmetric_tridiagonal() const;

    /// Hermitian within `tol`, measured as ||A - A*||_F <= tol.
    bool is_hermitian(double tol) const;

    bool operator==(const DenseMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

  private:
    std::size_t rows_, cols_;
    std::vector<cplx> a_;
};

DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator*(cplx s, const DenseMatrix& a);

/// Kronecker product: (A sized ra x ca, B sized rb x cb) -> (ra*rb) x (ca*cb),
/// with (A (x) B)[i*rb+k, j*cb+l] = A[i,j] * B[k,l].
/// Throws DimensionError when the product size overflows.
DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b);

/// A (+) O_{target - rows(A)}: A in the leading block, zeros elsewhere.
/// Requires A square and target >= rows(A).
DenseMatrix direct_sum_pad(const DenseMatrix& a, std::size_t target);

/// tr(B* A) = sum_{i,j} conj(B[i,j]) * A[i,j]. Shapes must match.
cplx frobenius_inner(const DenseMatrix& a, const DenseMatrix& b);

}  // namespace glt
