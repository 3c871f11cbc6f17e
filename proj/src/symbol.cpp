#include "glt/symbol.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "glt/parallel.hpp"

namespace glt {

namespace {
constexpr double kPi = std::numbers::pi;

double norm2(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}
}  // namespace

double ComparisonVectors::zeta_eta_norm() const {
    if (zeta.size() != eta.size()) throw DimensionError("comparison vectors have unequal length");
    double s = 0.0;
    for (std::size_t i = 0; i < zeta.size(); ++i) {
        double d = zeta[i] - eta[i];
        s += d * d;
    }
    return std::sqrt(s);
}

double ComparisonVectors::gamma_norm() const { return norm2(gamma); }

cplx glt_inner(const DenseMatrix& a, const DenseMatrix& b) {
    if (!a.square() || a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError("glt_inner requires equal square shapes");
    return frobenius_inner(a, b) / (double)a.rows();
}

cplx fourier_coefficient(const DenseMatrix& a, long j, long k) {
    if (!a.square()) throw DimensionError("fourier_coefficient requires a square matrix");
    return glt_inner(a, basis_truncation(j, k, a.rows()));
}

cplx fast_coefficient(const DenseMatrix& a, long j, long k) {
    if (!a.square()) throw DimensionError("fast_coefficient requires a square matrix");
    const GridSpec g = grid(a.rows());
    if ((std::size_t)std::labs(k) >= g.p)
        throw DomainError("basis offset |k|=" + std::to_string(std::labs(k)) +
                          " must be smaller than block size " + std::to_string(g.p));
    const long aj = std::labs(j);
    cplx total = 0.0;
    for (std::size_t i = 1; i <= g.m; ++i) {
        // k-th diagonal (row - col = k) of the i-th p x p diagonal block
        cplx diag_sum = 0.0;
        const std::size_t base = (i - 1) * g.p;
        for (std::size_t r = 0; r < g.p; ++r) {
            long s = (long)r - k;
            if (s < 0 || s >= (long)g.p) continue;
            diag_sum += a(base + r, base + (std::size_t)s);
        }
        cplx phase = std::polar(1.0, 2.0 * kPi * (double)aj * (double)i / (double)g.m);
        if (j < 0) phase = std::conj(phase);
        total += std::conj(phase) * diag_sum;
    }
    return total / (double)a.rows();
}

SymbolCoeffs extract_symbol(const DenseMatrix& a, long l, unsigned threads) {
    if (!a.square()) throw DimensionError("extract_symbol requires a square matrix");
    if (l < 0) throw DomainError("truncation order must be non-negative");
    const GridSpec g = grid(a.rows());
    if ((std::size_t)l >= g.p || (std::size_t)l >= g.m)
        throw DomainError("truncation order " + std::to_string(l) +
                          " too large for grid (m=" + std::to_string(g.m) +
                          ", p=" + std::to_string(g.p) + ")");

    SymbolCoeffs c;
    c.l_x = l;
    c.l_theta = l;
    c.m_used = a.rows();
    c.table.assign((std::size_t)(2 * l + 1) * (std::size_t)(2 * l + 1), 0.0);

    const double n = (double)a.rows();
    const long width = 2 * l + 1;
    parallel_for((std::size_t)(width * width), threads, [&](std::size_t idx) {
        long j = (long)(idx / (std::size_t)width) - l;
        long k = (long)(idx % (std::size_t)width) - l;
        cplx raw = fast_coefficient(a, j, k);
        double basis_norm = (double)g.m * (double)(g.p - (std::size_t)std::labs(k)) / n;
        cplx recentre = std::polar(1.0, kPi * (double)std::labs(j) / (double)g.m);
        if (j < 0) recentre = std::conj(recentre);
        c.at(j, k) = raw / basis_norm * recentre;
    });

    double defect = 0.0;
    for (long j = -l; j <= l; ++j)
        for (long k = -l; k <= l; ++k)
            defect = std::max(defect, std::abs(c.at(-j, -k) - std::conj(c.at(j, k))));
    c.hermitian_defect = defect;
    return c;
}

cplx eval_symbol(const SymbolCoeffs& c, double x, double theta) {
    cplx s = 0.0;
    for (long j = -c.l_x; j <= c.l_x; ++j) {
        cplx ex = std::polar(1.0, 2.0 * kPi * (double)j * x);
        cplx inner = 0.0;
        for (long k = -c.l_theta; k <= c.l_theta; ++k)
            inner += c.at(j, k) * std::polar(1.0, (double)k * theta);
        s += ex * inner;
    }
    return s;
}

std::vector<cplx> eval_symbol_grid(const SymbolCoeffs& c, const std::vector<double>& xs,
                                   const std::vector<double>& thetas) {
    const long wj = 2 * c.l_x + 1, wk = 2 * c.l_theta + 1;
    const std::size_t nt = thetas.size(), nx = xs.size();

    // g_j(theta) = sum_k a_jk e^{i k theta}, then f = sum_j e^{2 pi i j x} g_j.
    std::vector<cplx> gj((std::size_t)wj * nt, 0.0);
    for (long j = -c.l_x; j <= c.l_x; ++j)
        for (std::size_t ti = 0; ti < nt; ++ti) {
            cplx s = 0.0;
            for (long k = -c.l_theta; k <= c.l_theta; ++k)
                s += c.at(j, k) * std::polar(1.0, (double)k * thetas[ti]);
            gj[(std::size_t)(j + c.l_x) * nt + ti] = s;
        }
    (void)wk;

    std::vector<cplx> out(nx * nt, 0.0);
    for (std::size_t xi = 0; xi < nx; ++xi) {
        for (long j = -c.l_x; j <= c.l_x; ++j) {
            cplx ex = std::polar(1.0, 2.0 * kPi * (double)j * xs[xi]);
            const cplx* row = &gj[(std::size_t)(j + c.l_x) * nt];
            for (std::size_t ti = 0; ti < nt; ++ti) out[xi * nt + ti] += ex * row[ti];
        }
    }
    return out;
}

ComparisonVectors comparison_vectors(const DenseMatrix& a, const SymbolCoeffs& c) {
    if (!a.square()) throw DimensionError("comparison_vectors requires a square matrix");
    const std::size_t n = a.rows();
    const GridSpec g = grid(n);
    const std::size_t m = g.m;

    EigenResult eig = hermitian_eigenvalues(a);

    std::vector<double> xs(m), ths(m);
    for (std::size_t j = 0; j < m; ++j) {
        xs[j] = (double)j / (double)m;
        ths[j] = 2.0 * kPi * (double)j / (double)m;
    }
    std::vector<cplx> samples = eval_symbol_grid(c, xs, ths);

    ComparisonVectors cv;
    cv.eta.resize(m * m);
    cv.gamma.resize(m * m);
    for (std::size_t i = 0; i < m * m; ++i) {
        cv.eta[i] = samples[i].real();
        cv.gamma[i] = samples[i].imag();
    }
    std::stable_sort(cv.eta.begin(), cv.eta.end(), std::greater<double>());

    if (m * m == n) {
        cv.zeta = std::move(eig.values);
    } else {
        // subsample the sorted eigenvalues onto the grid length: largest
        // index of each uniform bin, identity when n is a perfect square
        cv.zeta.resize(m * m);
        for (std::size_t t = 0; t < m * m; ++t)
            cv.zeta[t] = eig.values[(t + 1) * n / (m * m) - 1];
    }
    return cv;
}

double symbol_l2_error(const SymbolCoeffs& c, const BivariateFn& truth) {
    const std::size_t G = 256;
    std::vector<double> xs(G), ths(G);
    for (std::size_t i = 0; i < G; ++i) {
        xs[i] = ((double)i + 0.5) / (double)G;
        ths[i] = -kPi + 2.0 * kPi * ((double)i + 0.5) / (double)G;
    }
    std::vector<cplx> fl = eval_symbol_grid(c, xs, ths);
    double s = 0.0;
    for (std::size_t xi = 0; xi < G; ++xi)
        for (std::size_t ti = 0; ti < G; ++ti)
            s += std::norm(truth(xs[xi], ths[ti]) - fl[xi * G + ti]);
    return std::sqrt(s / (double)(G * G));
}

BivariateFn product_symbol(const FunctionSpec& a, const FunctionSpec& g) {
    return [a, g](double x, double theta) { return eval(a, x) * eval(g, theta); };
}

}  // namespace glt
