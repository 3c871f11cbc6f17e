#include <doctest.h>

#include <cmath>
#include <numbers>

#include "glt/fourier.hpp"
#include "oracles.hpp"

using glt::cplx;
using glt::Domain;
using glt::FourierTable;
using glt::FunctionSpec;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("torus coefficients of a finite expansion") {
    FunctionSpec f = FunctionSpec::expression("2-2*cos(t)");
    FourierTable c = fourier_coeffs_torus(f, 2, 64);
    CHECK(c.at(0).real() == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(c.at(1).real() == doctest::Approx(-1.0).epsilon(1e-13));
    CHECK(c.at(-1).real() == doctest::Approx(-1.0).epsilon(1e-13));
    CHECK(std::abs(c.at(2)) < 1e-13);
    CHECK(std::abs(c.at(-2)) < 1e-13);
}

TEST_CASE("torus coefficients of a pure mode") {
    FunctionSpec f = FunctionSpec::fourier({{1, 1.0}}, Domain::Torus);
    FourierTable c = fourier_coeffs_torus(f, 1, 64);
    CHECK(std::abs(c.at(1) - cplx(1.0)) < 1e-14);
    CHECK(std::abs(c.at(0)) < 1e-14);
    CHECK(std::abs(c.at(-1)) < 1e-14);
}

TEST_CASE("torus coefficients of theta^2 against closed form and oracle") {
    FunctionSpec f = FunctionSpec::expression("t^2");
    FourierTable c = fourier_coeffs_torus(f, 1, 4096);
    // closed form: c_0 = pi^2/3, c_{+-1} = -2; verified with the independent
    // Simpson oracle before freezing
    auto fn = [](double t) { return cplx(t * t, 0.0); };
    CHECK(std::abs(oracle::simpson_torus_coefficient(fn, 0) - cplx(kPi * kPi / 3.0)) < 1e-9);
    CHECK(std::abs(oracle::simpson_torus_coefficient(fn, 1) - cplx(-2.0)) < 1e-9);

    CHECK(c.at(0).real() == doctest::Approx(kPi * kPi / 3.0).epsilon(1e-6));
    CHECK(c.at(1).real() == doctest::Approx(-2.0).epsilon(1e-6));
    CHECK(c.at(-1).real() == doctest::Approx(-2.0).epsilon(1e-6));
}

TEST_CASE("unit-interval coefficient of the variable diffusion coefficient") {
    FunctionSpec a = FunctionSpec::expression("2*sin(x)+cos(2*x)");
    FourierTable c = fourier_coeffs_unit(a, 0, 1 << 16);
    // antiderivative: 2(1-cos 1) + sin(2)/2
    double expect = 2.0 * (1.0 - std::cos(1.0)) + 0.5 * std::sin(2.0);
    CHECK(expect == doctest::Approx(1.374044).epsilon(1e-6));
    CHECK(c.at(0).real() == doctest::Approx(expect).epsilon(1e-9));
    auto fn = [](double x) { return cplx(2.0 * std::sin(x) + std::cos(2.0 * x), 0.0); };
    CHECK(std::abs(oracle::simpson_unit_coefficient(fn, 0) - cplx(expect)) < 1e-12);
}

TEST_CASE("unit-interval trivial coefficients") {
    FunctionSpec one = FunctionSpec::expression("1", Domain::UnitInterval);
    FourierTable c = fourier_coeffs_unit(one, 3, 64);
    for (long j = 1; j <= 3; ++j) {
        CHECK(std::abs(c.at(j)) < 1e-14);
        CHECK(std::abs(c.at(-j)) < 1e-14);
    }
    CHECK(std::abs(c.at(0) - cplx(1.0)) < 1e-14);

    FunctionSpec mode = FunctionSpec::fourier({{1, 1.0}}, Domain::UnitInterval);
    FourierTable cm = fourier_coeffs_unit(mode, 1, 64);
    CHECK(std::abs(cm.at(1) - cplx(1.0)) < 1e-13);
    CHECK(std::abs(cm.at(0)) < 1e-13);
}

TEST_CASE("conjugate symmetry for real-valued sources") {
    for (const char* text : {"2*sin(x)+cos(2*x)", "x*x-x/2"}) {
        FunctionSpec a = FunctionSpec::expression(text, Domain::UnitInterval);
        FourierTable c = fourier_coeffs_unit(a, 5, 4096);
        for (long j = 0; j <= 5; ++j)
            CHECK(std::abs(c.at(-j) - std::conj(c.at(j))) < 1e-10);
    }
    FunctionSpec f = FunctionSpec::expression("exp(cos(t))");
    FourierTable c = fourier_coeffs_torus(f, 4, 4096);
    for (long k = 0; k <= 4; ++k)
        CHECK(std::abs(c.at(-k) - std::conj(c.at(k))) < 1e-10);
}

TEST_CASE("quadrature converges when M doubles") {
    FunctionSpec a = FunctionSpec::expression("2*sin(x)+cos(2*x)");
    FourierTable c1 = fourier_coeffs_unit(a, 3, 8192);
    FourierTable c2 = fourier_coeffs_unit(a, 3, 16384);
    for (long j = -3; j <= 3; ++j) CHECK(std::abs(c1.at(j) - c2.at(j)) < 1e-8);
}

TEST_CASE("midpoint rule handles the integrable endpoint singularity") {
    FunctionSpec a = FunctionSpec::builtin("inv-quartic-root", Domain::UnitInterval);
    FourierTable c = fourier_coeffs_unit(a, 0, (std::size_t)1 << 20);
    CHECK(c.at(0).real() == doctest::Approx(4.0 / 3.0).epsilon(1e-3 * 3.0 / 4.0));
    CHECK(std::abs(c.at(0).real() - 4.0 / 3.0) < 1e-3);
}

TEST_CASE("DFT exactness for trigonometric polynomials") {
    // 1 + 2cos t - cos 2t + 0.5 sin 3t: c_0=1, c_{+-1}=1, c_{+-2}=-1/2,
    // c_{+-3} = -+ i/4
    FunctionSpec f = FunctionSpec::expression("1+2*cos(t)-cos(2*t)+0.5*sin(3*t)");
    FourierTable c = fourier_coeffs_torus(f, 3, 64);
    CHECK(std::abs(c.at(0) - cplx(1.0)) < 1e-12);
    CHECK(std::abs(c.at(1) - cplx(1.0)) < 1e-12);
    CHECK(std::abs(c.at(-1) - cplx(1.0)) < 1e-12);
    CHECK(std::abs(c.at(2) - cplx(-0.5)) < 1e-12);
    CHECK(std::abs(c.at(-2) - cplx(-0.5)) < 1e-12);
    CHECK(std::abs(c.at(3) - cplx(0.0, -0.25)) < 1e-12);
    CHECK(std::abs(c.at(-3) - cplx(0.0, 0.25)) < 1e-12);
}

TEST_CASE("resolution preconditions") {
    FunctionSpec f = FunctionSpec::expression("2-2*cos(t)");
    CHECK_THROWS_AS(fourier_coeffs_torus(f, 4, 16), glt::DomainError);
    FunctionSpec a = FunctionSpec::expression("x");
    CHECK_THROWS_AS(fourier_coeffs_unit(a, 8, 32), glt::DomainError);
}
