#pragma once

#include <complex>
#include <vector>

#include "glt/function_spec.hpp"

namespace glt {

/// Center-symmetric Fourier coefficient table c_k, |k| <= max_index, with the
/// domain convention it was computed under:
///   torus:          c_k = (1/2pi) integral_{-pi}^{pi} f(t) e^{-ikt} dt
///   unit interval:  c_j = integral_0^1 a(x) e^{-2 pi i j x} dx
class FourierTable {
  public:
    FourierTable(Domain d, long max_index)
        : domain_(d), max_(max_index), c_(2 * (std::size_t)max_index + 1, 0.0) {}

    Domain domain() const { return domain_; }
    long max_index() const { return max_; }

    /// Coefficient c_k; indices outside the table read as 0.
    std::complex<double> at(long k) const {
        if (k < -max_ || k > max_) return 0.0;
        return c_[(std::size_t)(k + max_)];
    }
    void set(long k, std::complex<double> v) { c_.at((std::size_t)(k + max_)) = v; }

  private:
    Domain domain_;
    long max_;
    std::vector<std::complex<double>> c_;
};

/// Coefficients of f on [-pi,pi] through the M-point uniform trapezoidal/DFT
/// rule; exact for trigonometric polynomials of degree < M - K. Requires
/// M >= 4K + 4. Functions carrying exact coefficient data bypass quadrature.
FourierTable fourier_coeffs_torus(const FunctionSpec& f, long K, std::size_t M);

/// Coefficients of a on [0,1] through the M-panel composite midpoint rule
/// (never evaluates at the endpoints, so integrable endpoint singularities
/// are fine). Requires M >= 4J + 4.
FourierTable fourier_coeffs_unit(const FunctionSpec& a, long J, std::size_t M);

/// Convenience wrappers choosing M = default_quadrature_points(f).
FourierTable fourier_coeffs_torus(const FunctionSpec& f, long K);
FourierTable fourier_coeffs_unit(const FunctionSpec& a, long J);

}  // namespace glt
