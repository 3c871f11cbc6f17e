#include "glt/fourier.hpp"

#include <cmath>
#include <numbers>

#include "glt/error.hpp"

namespace glt {

namespace {

constexpr double kPi = std::numbers::pi;

void check_resolution(long K, std::size_t M) {
    if (K < 0) throw DomainError("coefficient order must be non-negative");
    if (M < 4 * (std::size_t)K + 4)
        throw DomainError("quadrature size " + std::to_string(M) + " too small for order " +
                          std::to_string(K) + " (need M >= 4K+4)");
}

FourierTable from_exact(const FunctionSpec& f, long K) {
    FourierTable t(f.domain(), K);
    for (const auto& [k, c] : f.exact_fourier())
        if (k >= -K && k <= K) t.set(k, c);
    return t;
}

}  // namespace

FourierTable fourier_coeffs_torus(const FunctionSpec& f, long K, std::size_t M) {
    check_resolution(K, M);
    if (f.domain() != Domain::Torus)
        throw DomainError("fourier_coeffs_torus needs a torus-domain function");
    if (f.has_exact_fourier()) return from_exact(f, K);

    // Uniform nodes over the period; the trapezoidal rule collapses to a DFT.
    std::vector<std::complex<double>> fv(M);
    for (std::size_t q = 0; q < M; ++q) {
        double t = -kPi + 2.0 * kPi * (double)q / (double)M;
        fv[q] = eval(f, t);
    }
    FourierTable out(Domain::Torus, K);
    for (long k = -K; k <= K; ++k) {
        std::complex<double> s = 0.0;
        for (std::size_t q = 0; q < M; ++q) {
            double t = -kPi + 2.0 * kPi * (double)q / (double)M;
            s += fv[q] * std::polar(1.0, -(double)k * t);
        }
        out.set(k, s / (double)M);
    }
    return out;
}

FourierTable fourier_coeffs_unit(const FunctionSpec& a, long J, std::size_t M) {
    check_resolution(J, M);
    if (a.domain() != Domain::UnitInterval)
        throw DomainError("fourier_coeffs_unit needs a unit-interval function");
    if (a.has_exact_fourier()) return from_exact(a, J);

    std::vector<std::complex<double>> av(M);
    for (std::size_t q = 0; q < M; ++q) {
        double x = ((double)q + 0.5) / (double)M;
        av[q] = eval(a, x);
    }
    FourierTable out(Domain::UnitInterval, J);
    for (long j = -J; j <= J; ++j) {
        std::complex<double> s = 0.0;
        for (std::size_t q = 0; q < M; ++q) {
            double x = ((double)q + 0.5) / (double)M;
            s += av[q] * std::polar(1.0, -2.0 * kPi * (double)j * x);
        }
        out.set(j, s / (double)M);
    }
    return out;
}

FourierTable fourier_coeffs_torus(const FunctionSpec& f, long K) {
    return fourier_coeffs_torus(f, K, std::max<std::size_t>(default_quadrature_points(f),
                                                            4 * (std::size_t)std::max(K, 0L) + 4));
}

FourierTable fourier_coeffs_unit(const FunctionSpec& a, long J) {
    return fourier_coeffs_unit(a, J, std::max<std::size_t>(default_quadrature_points(a),
                                                           4 * (std::size_t)std::max(J, 0L) + 4));
}

}  // namespace glt
