#pragma once

#include <functional>
#include <string>
#include <vector>

#include "glt/dense_matrix.hpp"
#include "glt/eigen.hpp"
#include "glt/generators.hpp"

namespace glt {

/// Bivariate Fourier coefficient table a_{jk}, |j| <= l_x, |k| <= l_theta,
/// representing f_l(x,theta) = sum a_jk e^{2 pi i j x} e^{i k theta}.
struct SymbolCoeffs {
    long l_x = 0;
    long l_theta = 0;
    std::vector<cplx> table;  // row-major, (2*l_x+1) x (2*l_theta+1)
    std::size_t m_used = 0;   // matrix size the coefficients were estimated at
    std::string family_id;
    double hermitian_defect = 0.0;  // max |a_{-j,-k} - conj(a_jk)|

    cplx& at(long j, long k) {
        return table[(std::size_t)((j + l_x) * (2 * l_theta + 1) + (k + l_theta))];
    }
    const cplx& at(long j, long k) const {
        return table[(std::size_t)((j + l_x) * (2 * l_theta + 1) + (k + l_theta))];
    }
};

/// Sorted spectral data versus sorted symbol samples on the square grid
/// (x, theta) = (j/m, 2 pi k/m), j,k = 0..m-1 with m = floor(sqrt(n)).
struct ComparisonVectors {
    std::vector<double> zeta;   // eigenvalues, sorted non-increasing, length m^2
    std::vector<double> eta;    // Re f_l samples, sorted non-increasing, length m^2
    std::vector<double> gamma;  // Im f_l samples, grid order, length m^2

    double zeta_eta_norm() const;
    double gamma_norm() const;
};

/// Finite-n inner product <A,B> = (1/n) tr(B* A). Shapes must match.
cplx glt_inner(const DenseMatrix& a, const DenseMatrix& b);

/// a_jk = <A, T_{n,jk}> against the basis truncation; O(n^2).
cplx fourier_coefficient(const DenseMatrix& a, long j, long k);

/// Same value as fourier_coefficient through the structured trace
///   (1/n) sum_i e^{-2 pi i j (i/m)} * (sum of the k-th diagonal of the
///   i-th p x p diagonal block of A),
/// at O(m p) cost.
cplx fast_coefficient(const DenseMatrix& a, long j, long k);

/// Recovers the truncated symbol table from a single matrix. Each raw trace
/// coefficient is scaled to the continuum normalization: divided by the
/// finite-n basis norm m(p-|k|)/n and re-centred by the half-block phase
/// e^{i pi j / m} (the basis carries its grid phase at the right edge of each
/// block). Requires l < p and l < m of grid(n).
SymbolCoeffs extract_symbol(const DenseMatrix& a, long l, unsigned threads = 1);

/// f_l(x, theta); theta is wrapped periodically.
cplx eval_symbol(const SymbolCoeffs& c, double x, double theta);

/// Values on a tensor grid, row-major over (xs index, thetas index).
std::vector<cplx> eval_symbol_grid(const SymbolCoeffs& c, const std::vector<double>& xs,
                                   const std::vector<double>& thetas);

/// Builds the comparison data for a Hermitian matrix and a recovered symbol.
/// When n is not a perfect square the n eigenvalues are subsampled to the
/// m^2 grid length (largest index of each uniform bin of the sorted vector).
ComparisonVectors comparison_vectors(const DenseMatrix& a, const SymbolCoeffs& c);

using BivariateFn = std::function<cplx(double, double)>;

/// || truth - f_l ||_2 under the normalized measure dx dtheta / (2 pi),
/// computed on the 256 x 256 tensor midpoint grid of [0,1] x [-pi,pi].
double symbol_l2_error(const SymbolCoeffs& c, const BivariateFn& truth);

/// Product symbol a(x) * g(theta) as a bivariate evaluator.
BivariateFn product_symbol(const FunctionSpec& a, const FunctionSpec& g);

}  // namespace glt
