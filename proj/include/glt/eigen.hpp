#pragma once

#include <vector>

#include "glt/dense_matrix.hpp"

namespace glt {

/// Eigenvalues (or singular values) sorted non-increasing, together with the
/// worst-case distance bound to the exact spectrum.
struct EigenResult {
    std::vector<double> values;
    double residual_bound = 0.0;
};

/// Eigenvalues of a real symmetric tridiagonal matrix given by its diagonal
/// and subdiagonal, via Sturm-sequence bisection. `tol` is an absolute
/// eigenvalue tolerance; tol <= 0 bisects to machine precision.
EigenResult tridiagonal_eigenvalues(const std::vector<double>& diag,
                                    const std::vector<double>& offdiag, double tol = 0.0);

/// Eigenvalues of a Hermitian matrix, sorted non-increasing.
///
/// Real symmetric tridiagonal input is detected automatically and routed to
/// Sturm-sequence bisection; anything else goes through cyclic Jacobi with
/// complex rotations (off-diagonal tolerance 1e-12 * ||A||_F, 100 sweep cap).
/// Throws DomainError when A is not Hermitian within max(tol, 1e-10)*(1+||A||_F),
/// ConvergenceError when Jacobi hits the sweep cap.
EigenResult hermitian_eigenvalues(const DenseMatrix& a, double tol = 0.0);

/// Singular values sorted non-increasing. Hermitian input (bitwise test) uses
/// |eigenvalues|; the general path diagonalizes A*A and takes square roots.
EigenResult singular_values(const DenseMatrix& a, double tol = 0.0);

}  // namespace glt
