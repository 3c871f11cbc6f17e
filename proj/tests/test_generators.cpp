#include <doctest.h>

#include <cmath>
#include <cstring>
#include <numbers>

#include "glt/eigen.hpp"
#include "glt/generators.hpp"
#include "oracles.hpp"

using glt::cplx;
using glt::DenseMatrix;
using glt::Domain;
using glt::FourierTable;
using glt::FunctionSpec;
using glt::GridSpec;
using glt::grid;
using glt::basis_truncation;

namespace {

constexpr double kPi = std::numbers::pi;

bool bit_equal(const DenseMatrix& a, const DenseMatrix& b) {
    return a.rows() == b.rows() && a.cols() == b.cols() &&
           std::memcmp(a.entries().data(), b.entries().data(),
                       a.entries().size() * sizeof(cplx)) == 0;
}

FourierTable laplacian_table() {
    FourierTable t(Domain::Torus, 1);
    t.set(0, 2.0);
    t.set(1, -1.0);
    t.set(-1, -1.0);
    return t;
}

}  // namespace

TEST_CASE("grid bookkeeping") {
    GridSpec g = grid(1600);
    CHECK(g.m == 40);
    CHECK(g.p == 40);
    CHECK(g.pad == 0);
    CHECK(g.basis_index.size() == 1600);

    GridSpec h = grid(10);
    CHECK(h.m == 3);
    CHECK(h.p == 3);
    CHECK(h.pad == 1);
    CHECK(h.basis_index.size() == 9);
    CHECK(h.sample_points.front() == doctest::Approx(1.0 / 3.0));
    CHECK(h.sample_points.back() == 1.0);

    GridSpec one = grid(1);
    CHECK(one.m == 1);
    CHECK(one.p == 1);
    CHECK(one.pad == 0);

    // m*p + pad = n and Kronecker-compatible ordering
    for (std::size_t n : {7u, 12u, 100u, 1000u}) {
        GridSpec s = grid(n);
        CHECK(s.m * s.p + s.pad == n);
        CHECK(s.pad < s.m + s.p);
        CHECK(s.basis_index[1].second == 1);  // inner loop over offsets
        CHECK(s.basis_index[s.p].first == doctest::Approx(2.0 / (double)s.m));
    }
}

TEST_CASE("toeplitz from coefficient tables") {
    DenseMatrix t = toeplitz(laplacian_table(), 3);
    CHECK(t(0, 0) == cplx(2.0));
    CHECK(t(0, 1) == cplx(-1.0));
    CHECK(t(0, 2) == cplx(0.0));
    CHECK(t(1, 0) == cplx(-1.0));
    CHECK(t(2, 1) == cplx(-1.0));
    CHECK(t(2, 2) == cplx(2.0));

    FourierTable shift(Domain::Torus, 1);
    shift.set(1, 1.0);
    DenseMatrix s = toeplitz(shift, 3);
    CHECK(s(1, 0) == cplx(1.0));
    CHECK(s(2, 1) == cplx(1.0));
    CHECK(s(0, 0) == cplx(0.0));
    CHECK(s(0, 1) == cplx(0.0));

    // from the quadrature table of theta^2
    FunctionSpec f = FunctionSpec::expression("t^2");
    DenseMatrix q = toeplitz(fourier_coeffs_torus(f, 1, 4096), 2);
    CHECK(q(0, 0).real() == doctest::Approx(kPi * kPi / 3.0).epsilon(1e-6));
    CHECK(q(0, 1).real() == doctest::Approx(-2.0).epsilon(1e-6));
    CHECK(q(1, 0).real() == doctest::Approx(-2.0).epsilon(1e-6));
}

TEST_CASE("toeplitz of a real even table is real symmetric") {
    FourierTable t(Domain::Torus, 2);
    t.set(0, 1.5);
    t.set(1, -0.25);
    t.set(-1, -0.25);
    t.set(2, 0.75);
    t.set(-2, 0.75);
    DenseMatrix m = toeplitz(t, 7);
    CHECK(m.is_hermitian_exact());
    for (const cplx& z : m.entries()) CHECK(z.imag() == 0.0);
}

TEST_CASE("diag_sample") {
    FunctionSpec id = FunctionSpec::builtin("identity", Domain::UnitInterval);
    DenseMatrix d = diag_sample(id, 2);
    CHECK(d(0, 0) == cplx(0.5));
    CHECK(d(1, 1) == cplx(1.0));
    CHECK(d(0, 1) == cplx(0.0));

    DenseMatrix ones = diag_sample(FunctionSpec::builtin("one", Domain::UnitInterval), 3);
    CHECK(bit_equal(ones, DenseMatrix::identity(3)));

    FunctionSpec sing = FunctionSpec::builtin("inv-quartic-root", Domain::UnitInterval);
    DenseMatrix s = diag_sample(sing, 4);
    CHECK(s(0, 0).real() == doctest::Approx(std::pow(0.25, -0.25)).epsilon(1e-15));
    CHECK(s(1, 1).real() == doctest::Approx(std::pow(0.5, -0.25)).epsilon(1e-15));
    CHECK(s(2, 2).real() == doctest::Approx(std::pow(0.75, -0.25)).epsilon(1e-15));
    CHECK(s(3, 3) == cplx(1.0));
}

TEST_CASE("lt_matrix examples") {
    FunctionSpec id = FunctionSpec::builtin("identity", Domain::UnitInterval);
    FourierTable one(Domain::Torus, 0);
    one.set(0, 1.0);
    DenseMatrix m = lt_matrix(id, one, 4, 2);
    CHECK(m(0, 0) == cplx(0.5));
    CHECK(m(1, 1) == cplx(0.5));
    CHECK(m(2, 2) == cplx(1.0));
    CHECK(m(3, 3) == cplx(1.0));

    // n = m degenerates to the diagonal sampler when f = 1
    FunctionSpec a = FunctionSpec::expression("x*x+1/4");
    DenseMatrix d = lt_matrix(a, one, 5, 5);
    CHECK(bit_equal(d, diag_sample(a, 5)));

    // block-diagonal laplacian blocks with a trailing zero pad
    DenseMatrix b = lt_matrix(FunctionSpec::builtin("one", Domain::UnitInterval),
                              laplacian_table(), 5, 2);
    CHECK(b(0, 0) == cplx(2.0));
    CHECK(b(0, 1) == cplx(-1.0));
    CHECK(b(1, 0) == cplx(-1.0));
    CHECK(b(2, 3) == cplx(-1.0));
    CHECK(b(1, 2) == cplx(0.0));  // no coupling between blocks
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(b(4, i) == cplx(0.0));
        CHECK(b(i, 4) == cplx(0.0));
    }
    CHECK_THROWS_AS(lt_matrix(a, one, 3, 4), glt::DomainError);
}

TEST_CASE("lt_matrix is bit-equal to the kron+pad composition") {
    FunctionSpec a = FunctionSpec::expression("2*sin(x)+cos(2*x)");
    for (auto [n, m] : {std::pair<std::size_t, std::size_t>{12, 3},
                        {100, 10},
                        {37, 5},
                        {9, 9}}) {
        DenseMatrix direct = lt_matrix(a, laplacian_table(), n, m);
        DenseMatrix composed = direct_sum_pad(
            kron(diag_sample(a, m), toeplitz(laplacian_table(), n / m)), n);
        CHECK_MESSAGE(bit_equal(direct, composed), "n=", n, " m=", m);
    }
}

TEST_CASE("basis truncation small cases") {
    // n=4: m=2, p=2, pad=0
    CHECK(bit_equal(basis_truncation(0, 0, 4), DenseMatrix::identity(4)));

    DenseMatrix s = basis_truncation(0, 1, 4);
    CHECK(s(1, 0) == cplx(1.0));
    CHECK(s(3, 2) == cplx(1.0));
    CHECK(s(2, 1) == cplx(0.0));  // no cross-block entry
    CHECK(s(0, 0) == cplx(0.0));

    DenseMatrix d = basis_truncation(1, 0, 4);
    CHECK(d(0, 0).real() == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(d(1, 1).real() == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(d(2, 2).real() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(d(3, 3).real() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::abs(d(0, 0).imag()) < 1e-15);

    CHECK_THROWS_AS(basis_truncation(0, 2, 4), glt::DomainError);
    CHECK_THROWS_AS(basis_truncation(0, -2, 4), glt::DomainError);
}

TEST_CASE("basis truncation identity block and pad") {
    // n=10: m=3, p=3, pad=1
    DenseMatrix t = basis_truncation(0, 0, 10);
    for (std::size_t i = 0; i < 9; ++i) CHECK(t(i, i) == cplx(1.0));
    CHECK(t(9, 9) == cplx(0.0));
}

TEST_CASE("basis truncation adjoint identity") {
    for (long j : {-3L, -1L, 0L, 2L}) {
        for (long k : {-2L, 0L, 1L}) {
            DenseMatrix t = basis_truncation(j, k, 36);
            DenseMatrix adj = basis_truncation(-j, -k, 36);
            CHECK_MESSAGE(t.adjoint() == adj, "j=", j, " k=", k);
        }
    }
}

TEST_CASE("fd diffusion matrix") {
    FunctionSpec one = FunctionSpec::builtin("one", Domain::UnitInterval);
    DenseMatrix c = fd_diffusion_matrix(one, 3);
    CHECK(c(0, 0) == cplx(2.0));
    CHECK(c(0, 1) == cplx(-1.0));
    CHECK(c(1, 0) == cplx(-1.0));
    CHECK(c(1, 1) == cplx(2.0));
    CHECK(c(0, 2) == cplx(0.0));

    // hand evaluation for a(x) = x at n = 2: grid x_s = s/3
    FunctionSpec id = FunctionSpec::builtin("identity", Domain::UnitInterval);
    DenseMatrix m = fd_diffusion_matrix(id, 2);
    CHECK(m(0, 0).real() == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    CHECK(m(1, 1).real() == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
    CHECK(m(0, 1).real() == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(m(1, 0).real() == doctest::Approx(-0.5).epsilon(1e-15));

    // the experiment matrix: spot-check the corner entry
    FunctionSpec a = FunctionSpec::expression("2*sin(x)+cos(2*x)");
    const std::size_t n = 1600;
    DenseMatrix big = fd_diffusion_matrix(a, n);
    auto av = [&](double x) { return 2.0 * std::sin(x) + std::cos(2.0 * x); };
    double h = 1.0 / (double)(n + 1);
    CHECK(big(0, 0).real() == doctest::Approx(av(0.5 * h) + av(1.5 * h)).epsilon(1e-14));
    CHECK(big.is_real_symmetric_tridiagonal());
}

TEST_CASE("fd bands match the dense carrier") {
    FunctionSpec a = FunctionSpec::expression("2*sin(x)+cos(2*x)");
    std::vector<double> d, e;
    fd_diffusion_bands(a, 50, d, e);
    DenseMatrix m = fd_diffusion_matrix(a, 50);
    for (std::size_t i = 0; i < 50; ++i) {
        CHECK(m(i, i).real() == d[i]);
        if (i + 1 < 50) CHECK(m(i, i + 1).real() == e[i]);
    }
}

TEST_CASE("fd matrix positive definite for positive coefficients") {
    FunctionSpec a = FunctionSpec::expression("2*sin(x)+cos(2*x)");  // > 0 on (0,1)
    for (std::size_t n : {10u, 64u, 200u}) {
        auto eig = hermitian_eigenvalues(fd_diffusion_matrix(a, n));
        CHECK(eig.values.back() > 0.0);
    }
}

TEST_CASE("singular coefficient evaluation propagates") {
    // log(x-2) is undefined on (0,1)
    FunctionSpec bad = FunctionSpec::expression("log(x-2)");
    CHECK_THROWS_AS(fd_diffusion_matrix(bad, 8), glt::NumericError);
    CHECK_THROWS_AS(diag_sample(bad, 4), glt::NumericError);
}
