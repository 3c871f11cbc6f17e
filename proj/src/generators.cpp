#include "glt/generators.hpp"

#include <cmath>
#include <numbers>

namespace glt {

namespace {
constexpr double kPi = std::numbers::pi;
}

GridSpec grid(std::size_t n) {
    if (n == 0) throw DomainError("grid requires n >= 1");
    GridSpec g;
    g.n = n;
    g.m = (std::size_t)std::floor(std::sqrt((double)n));
    while ((g.m + 1) * (g.m + 1) <= n) ++g.m;  // guard against sqrt rounding
    while (g.m * g.m > n) --g.m;
    g.p = n / g.m;
    g.pad = n - g.m * g.p;
    g.sample_points.reserve(g.m);
    for (std::size_t j = 1; j <= g.m; ++j) g.sample_points.push_back((double)j / (double)g.m);
    g.basis_index.reserve(g.m * g.p);
    for (std::size_t j = 0; j < g.m; ++j)
        for (std::size_t r = 0; r < g.p; ++r) g.basis_index.push_back({g.sample_points[j], r});
    return g;
}

DenseMatrix toeplitz(const FourierTable& fhat, std::size_t n) {
    if (n == 0) throw DomainError("toeplitz requires n >= 1");
    DenseMatrix t(n, n);
    long nn = (long)n;
    for (long i = 0; i < nn; ++i)
        for (long j = 0; j < nn; ++j) t((std::size_t)i, (std::size_t)j) = fhat.at(i - j);
    return t;
}

DenseMatrix diag_sample(const FunctionSpec& a, std::size_t m) {
    if (m == 0) throw DomainError("diag_sample requires m >= 1");
    DenseMatrix d(m, m);
    for (std::size_t i = 1; i <= m; ++i) d(i - 1, i - 1) = eval(a, (double)i / (double)m);
    return d;
}

DenseMatrix lt_matrix(const FunctionSpec& a, const FourierTable& fhat, std::size_t n,
                      std::size_t m) {
    if (m < 1 || m > n) throw DomainError("lt_matrix requires 1 <= m <= n");
    const std::size_t p = n / m;
    DenseMatrix block = toeplitz(fhat, p);
    DenseMatrix out(n, n);
    for (std::size_t i = 0; i < m; ++i) {
        cplx ai = eval(a, (double)(i + 1) / (double)m);
        if (ai == cplx(0.0, 0.0)) continue;
        for (std::size_t r = 0; r < p; ++r)
            for (std::size_t s = 0; s < p; ++s) out(i * p + r, i * p + s) = ai * block(r, s);
    }
    return out;
}

DenseMatrix basis_truncation(long j, long k, std::size_t n) {
    GridSpec g = grid(n);
    if ((std::size_t)std::labs(k) >= g.p)
        throw DomainError("basis offset |k|=" + std::to_string(std::labs(k)) +
                          " must be smaller than block size " + std::to_string(g.p));
    DenseMatrix t(n, n);
    const long aj = std::labs(j);
    for (std::size_t i = 1; i <= g.m; ++i) {
        // e^{2 pi i j l} at l = i/m; computed for |j| and conjugated for j < 0
        // so that the adjoint identity T(j,k)* = T(-j,-k) holds bitwise.
        cplx phase = std::polar(1.0, 2.0 * kPi * (double)aj * (double)i / (double)g.m);
        if (j < 0) phase = std::conj(phase);
        for (std::size_t r = 0; r < g.p; ++r) {
            long s = (long)r - k;
            if (s < 0 || s >= (long)g.p) continue;
            t((i - 1) * g.p + r, (i - 1) * g.p + (std::size_t)s) = phase;
        }
    }
    return t;
}

DenseMatrix fd_diffusion_matrix(const FunctionSpec& a, std::size_t n) {
    if (n < 2) throw DomainError("fd_diffusion_matrix requires n >= 2");
    std::vector<double> d, e;
    fd_diffusion_bands(a, n, d, e);
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = d[i];
        if (i + 1 < n) {
            m(i, i + 1) = e[i];
            m(i + 1, i) = e[i];
        }
    }
    return m;
}

void fd_diffusion_bands(const FunctionSpec& a, std::size_t n, std::vector<double>& diag,
                        std::vector<double>& offdiag) {
    diag.assign(n, 0.0);
    offdiag.assign(n > 1 ? n - 1 : 0, 0.0);
    const double h = 1.0 / (double)(n + 1);
    // a(x_{j+1/2}) for j = 0..n; x_s = s*h
    std::vector<double> half(n + 1);
    for (std::size_t j = 0; j <= n; ++j) half[j] = eval(a, ((double)j + 0.5) * h).real();
    for (std::size_t j = 0; j < n; ++j) {
        diag[j] = half[j + 1] + half[j];
        if (j + 1 < n) offdiag[j] = -half[j + 1];
    }
}

}  // namespace glt
