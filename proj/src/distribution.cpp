#include "glt/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "glt/eigen.hpp"
#include "glt/generators.hpp"

namespace glt {

namespace {

constexpr double kPi = std::numbers::pi;

double integral_of_f_of_symbol(const std::function<double(double)>& F, const BivariateFn& symbol,
                               bool abs_value) {
    const std::size_t G = 256;
    double s = 0.0;
    for (std::size_t xi = 0; xi < G; ++xi) {
        double x = ((double)xi + 0.5) / (double)G;
        for (std::size_t ti = 0; ti < G; ++ti) {
            double th = -kPi + 2.0 * kPi * ((double)ti + 0.5) / (double)G;
            cplx v = symbol(x, th);
            s += F(abs_value ? std::abs(v) : v.real());
        }
    }
    return s / (double)(G * G);
}

std::vector<WeylResidual> residuals_from(const std::vector<double>& spectrum,
                                         const BivariateFn& symbol,
                                         const std::vector<TestFunction>& fs, bool abs_value) {
    std::vector<WeylResidual> out;
    out.reserve(fs.size());
    for (const auto& f : fs) {
        double avg = 0.0;
        for (double v : spectrum) avg += f.fn(v);
        avg /= (double)spectrum.size();
        double ref = integral_of_f_of_symbol(f.fn, symbol, abs_value);
        out.push_back({f.label, std::abs(avg - ref)});
    }
    return out;
}

}  // namespace

std::vector<TestFunction> default_test_functions() {
    std::vector<TestFunction> fs;
    for (double c : {0.0, 2.0, 4.0, 8.0}) {
        for (double w : {1.0, 4.0}) {
            double cut = 4.0 * std::sqrt(w);
            std::string label =
                "bump_c" + std::to_string((int)c) + "_w" + std::to_string((int)w);
            fs.push_back({label,
                          [c, w, cut](double t) {
                              return std::abs(t - c) < cut ? std::exp(-(t - c) * (t - c) / w) : 0.0;
                          },
                          std::abs(c) + cut});
        }
    }
    fs.push_back({"hat_quadratic",
                  [](double t) { return std::max(0.0, 1.0 - t * t / 25.0); }, 5.0});
    return fs;
}

std::vector<WeylResidual> weyl_eig_residual(const DenseMatrix& a, const BivariateFn& symbol,
                                            const std::vector<TestFunction>& fs) {
    EigenResult eig = hermitian_eigenvalues(a);
    return residuals_from(eig.values, symbol, fs, false);
}

std::vector<WeylResidual> weyl_sv_residual(const DenseMatrix& a, const BivariateFn& symbol,
                                           const std::vector<TestFunction>& fs) {
    EigenResult sv = singular_values(a);
    return residuals_from(sv.values, symbol, fs, true);
}

ZeroDistTrend zero_dist_trend(const std::function<DenseMatrix(std::size_t)>& family,
                              const std::vector<std::size_t>& sizes) {
    ZeroDistTrend t;
    t.sizes = sizes;
    for (std::size_t n : sizes) {
        DenseMatrix z = family(n);
        t.values.push_back(z.frobenius_norm_sq() / (double)n);
    }
    if (!t.values.empty()) {
        double first = t.values.front(), last = t.values.back();
        t.consistent_with_zero_distributed = (last < first / 4.0) && (last < 1e-2);
        if (first == 0.0 && last == 0.0) t.consistent_with_zero_distributed = true;
    }
    return t;
}

std::vector<std::size_t> default_rank_schedule(std::size_t n) {
    std::size_t root = (std::size_t)std::floor(std::sqrt((double)n));
    std::vector<std::size_t> ranks = {0};
    for (std::size_t r = 1; r < root; r *= 2) ranks.push_back(r);
    if (ranks.back() != root) ranks.push_back(root);
    return ranks;
}

QCurve q_estimate(const DenseMatrix& a, const std::vector<std::size_t>& ranks) {
    const std::size_t n = a.rows();
    EigenResult sv = singular_values(a);
    // suffix sums of sigma_i^2, accumulated from the tail for accuracy
    std::vector<double> tail(sv.values.size() + 1, 0.0);
    for (std::size_t i = sv.values.size(); i-- > 0;)
        tail[i] = tail[i + 1] + sv.values[i] * sv.values[i];

    QCurve q;
    q.ranks = ranks;
    for (std::size_t r : ranks) {
        if (r >= n) throw DomainError("rank " + std::to_string(r) + " outside [0, n)");
        q.values.push_back(std::sqrt(tail[std::min(r, sv.values.size())] / (double)n));
    }
    std::size_t root = (std::size_t)std::floor(std::sqrt((double)n));
    q.scalar = std::sqrt(tail[std::min(root, sv.values.size())] / (double)n);
    return q;
}

QCurve q_estimate(const DenseMatrix& a) { return q_estimate(a, default_rank_schedule(a.rows())); }

double acs_distance(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError("acs_distance requires equal shapes");
    return q_estimate(a - b).scalar;
}

double gnorm_squared(const DenseMatrix& a) { return glt_inner(a, a).real(); }

double lt_gnorm_squared(const FunctionSpec& a, const FourierTable& fhat, std::size_t n,
                        std::size_t m, int power) {
    if (m < 1 || m > n) throw DomainError("lt_gnorm_squared requires 1 <= m <= n");
    if (power != 1 && power != 2) throw DomainError("power must be 1 or 2");
    const std::size_t p = n / m;

    // ||(D (x) T)^q||_F^2 = (sum_i |a(i/m)|^{2q}) * ||T^q||_F^2
    double sum_a = 0.0;
    for (std::size_t i = 1; i <= m; ++i) {
        double v = std::abs(eval(a, (double)i / (double)m));
        sum_a += power == 1 ? v * v : v * v * v * v;
    }

    double block_norm_sq;
    if (power == 1) {
        block_norm_sq = 0.0;
        for (long k = -(long)(p - 1); k <= (long)(p - 1); ++k)
            block_norm_sq += (double)(p - (std::size_t)std::labs(k)) * std::norm(fhat.at(k));
    } else {
        DenseMatrix t = toeplitz(fhat, p);
        block_norm_sq = (t * t).frobenius_norm_sq();
    }
    return sum_a * block_norm_sq / (double)n;
}

}  // namespace glt
