#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "glt/expr.hpp"

namespace glt {

enum class FuncKind { Builtin, Expression, Fourier };
enum class Domain { UnitInterval, Torus };

/// A scalar function of one real variable: a named builtin, a parsed
/// expression, or an explicit finite Fourier expansion. Carries the domain it
/// lives on: [0,1] for coefficient functions a(x), [-pi,pi] for generating
/// functions f(theta).
class FunctionSpec {
  public:
    /// Builtin by name; see builtin_names(). Throws DomainError on unknown names.
    static FunctionSpec builtin(const std::string& name, Domain d);

    /// Expression text; the domain defaults from the variable used
    /// (x -> [0,1], t -> torus) unless given explicitly.
    static FunctionSpec expression(const std::string& text);
    static FunctionSpec expression(const std::string& text, Domain d);

    /// Explicit Fourier data: pairs (index k, coefficient). Evaluates as
    /// sum c_k e^{ikt} on the torus, sum c_j e^{2 pi i j t} on [0,1].
    static FunctionSpec fourier(std::vector<std::pair<long, std::complex<double>>> coeffs,
                                Domain d);

    /// Parses config/CLI shorthand: a registered builtin name, else expression.
    static FunctionSpec from_text(const std::string& text);
    static FunctionSpec from_text(const std::string& text, Domain d);

    FuncKind kind() const { return kind_; }
    Domain domain() const { return domain_; }
    const std::string& text() const { return text_; }

    /// Functions with an integrable endpoint singularity get a much finer
    /// default quadrature; see default_quadrature_points().
    bool flagged_singular() const { return singular_; }
    void set_flagged_singular(bool v) { singular_ = v; }

    /// Exact Fourier coefficients when the function is a finite trigonometric
    /// expansion (explicit-fourier kind, or a builtin that declares them).
    bool has_exact_fourier() const { return !coeffs_.empty(); }
    const std::vector<std::pair<long, std::complex<double>>>& exact_fourier() const {
        return coeffs_;
    }

    static const std::vector<std::string>& builtin_names();

    friend std::complex<double> eval(const FunctionSpec& f, double t);

  private:
    FunctionSpec() = default;
    static FunctionSpec expression_impl(const std::string& text, Domain d, ExprPtr ast);

    FuncKind kind_ = FuncKind::Builtin;
    Domain domain_ = Domain::UnitInterval;
    std::string text_;
    ExprPtr ast_;
    std::vector<std::pair<long, std::complex<double>>> coeffs_;
    bool singular_ = false;
    int builtin_id_ = -1;
};

/// Pointwise value. Unit-interval arguments must lie in [0,1] (tiny slack);
/// torus arguments are wrapped periodically onto [-pi,pi]. Singular
/// evaluations raise NumericError rather than returning Inf/NaN.
std::complex<double> eval(const FunctionSpec& f, double t);

/// 4096 for smooth functions, 2^20 for flagged-singular ones.
std::size_t default_quadrature_points(const FunctionSpec& f);

}  // namespace glt
