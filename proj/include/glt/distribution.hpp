#pragma once

#include <functional>
#include <string>
#include <vector>

#include "glt/dense_matrix.hpp"
#include "glt/fourier.hpp"
#include "glt/function_spec.hpp"
#include "glt/symbol.hpp"

namespace glt {

/// A compactly supported continuous test function for distribution checks.
struct TestFunction {
    std::string label;
    std::function<double(double)> fn;
    double support;  // fn(t) = 0 for |t| > support
};

/// Gaussian-windowed bumps exp(-(t-c)^2/w) cut at |t-c| < 4 sqrt(w) for
/// c in {0,2,4,8}, w in {1,4}, plus the quadratic hat max(0, 1 - t^2/25).
std::vector<TestFunction> default_test_functions();

struct WeylResidual {
    std::string label;
    double residual;
};

/// Per-test-function distance between the eigenvalue average (1/n) sum F(lambda_i)
/// and the symbol integral (1/2pi) int F(Re f(x,theta)) over [0,1] x [-pi,pi]
/// (256 x 256 tensor midpoint rule). A must be Hermitian.
std::vector<WeylResidual> weyl_eig_residual(const DenseMatrix& a, const BivariateFn& symbol,
                                            const std::vector<TestFunction>& fs);

/// Same with singular values against |f|.
std::vector<WeylResidual> weyl_sv_residual(const DenseMatrix& a, const BivariateFn& symbol,
                                           const std::vector<TestFunction>& fs);

/// ||Z_n||_F^2 / n along a family; diagnostic verdict, never a hard assertion.
struct ZeroDistTrend {
    std::vector<std::size_t> sizes;
    std::vector<double> values;
    bool consistent_with_zero_distributed = false;
};

ZeroDistTrend zero_dist_trend(const std::function<DenseMatrix(std::size_t)>& family,
                              const std::vector<std::size_t>& sizes);

/// SVD-tail upper bounds of the rank-split seminorm:
/// q_r(A) = sqrt(sum_{i>r} sigma_i^2 / n); scalar at r = floor(sqrt(n)).
struct QCurve {
    std::vector<std::size_t> ranks;
    std::vector<double> values;  // q_r, non-increasing
    double scalar = 0.0;         // q at rank floor(sqrt(n))
};

QCurve q_estimate(const DenseMatrix& a, const std::vector<std::size_t>& ranks);
QCurve q_estimate(const DenseMatrix& a);  // default rank schedule {0,1,2,4,...,floor(sqrt n)}

std::vector<std::size_t> default_rank_schedule(std::size_t n);

/// Finite-n approximation distance q_{floor(sqrt n)}(A - B).
double acs_distance(const DenseMatrix& a, const DenseMatrix& b);

/// ||A||_F^2 / n; equals Re glt_inner(A, A) exactly.
double gnorm_squared(const DenseMatrix& a);

/// gnorm_squared of [D_m(a) (x) T_p(f)]^power (+) O_pad evaluated from the
/// block structure without materializing the n x n matrix. power is 1 or 2.
double lt_gnorm_squared(const FunctionSpec& a, const FourierTable& fhat, std::size_t n,
                        std::size_t m, int power = 1);

/// Aggregated metrics for one parameter point; carried into CSV reports.
struct DistributionReport {
    std::size_t n = 0, m = 0, l = 0;
    std::vector<std::pair<std::string, double>> metrics;
};

}  // namespace glt
