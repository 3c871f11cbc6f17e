#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "glt/dense_matrix.hpp"
#include "glt/fourier.hpp"
#include "glt/function_spec.hpp"

namespace glt {

/// Block bookkeeping for size n: m = floor(sqrt(n)) blocks of size
/// p = floor(n/m), a trailing zero pad of n - m*p rows/columns, the sample
/// grid I_m = {j/m : j=1..m}, and the index set B_n of (grid point, offset)
/// pairs in Kronecker order (outer loop over grid points, inner over offsets).
struct GridSpec {
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t p = 0;
    std::size_t pad = 0;
    std::vector<double> sample_points;                       // I_m, ascending
    std::vector<std::pair<double, std::size_t>> basis_index;  // B_n

    /// Matrix row/column of basis pair (i-th grid point, offset r): (i-1)*p + r.
    std::size_t flat(std::size_t i, std::size_t r) const { return (i - 1) * p + r; }
};

GridSpec grid(std::size_t n);

/// Toeplitz matrix of the coefficient table: T[i,j] = fhat_{i-j}; indices
/// outside the table give zeros.
DenseMatrix toeplitz(const FourierTable& fhat, std::size_t n);

/// D_m(a) = diag(a(1/m), ..., a(m/m)). Singular evaluations propagate.
DenseMatrix diag_sample(const FunctionSpec& a, std::size_t m);

/// [D_m(a) (x) T_{floor(n/m)}(f)] (+) O_{n mod m}, exactly n x n. 1 <= m <= n.
DenseMatrix lt_matrix(const FunctionSpec& a, const FourierTable& fhat, std::size_t n,
                      std::size_t m);

/// Finite section of the basis operator with symbol e^{2 pi i j x} e^{i k theta}:
/// D_m(e^{2 pi i j x}) (x) S_k (+) O_pad on the grid of n, where S_k is the
/// p x p shift with ones on the k-th subdiagonal (row - col = k). |k| < p.
DenseMatrix basis_truncation(long j, long k, std::size_t n);

/// Second-order central finite-difference matrix of -(a(x) u')' on (0,1) with
/// Dirichlet boundaries: tridiagonal, diag_j = a(x_{j+1/2}) + a(x_{j-1/2}),
/// offdiag_j = -a(x_{j+1/2}), on the grid x_s = s/(n+1).
DenseMatrix fd_diffusion_matrix(const FunctionSpec& a, std::size_t n);

/// Diagonal and subdiagonal of fd_diffusion_matrix without materializing the
/// dense carrier; used for large-n eigenvalue runs.
void fd_diffusion_bands(const FunctionSpec& a, std::size_t n, std::vector<double>& diag,
                        std::vector<double>& offdiag);

}  // namespace glt
