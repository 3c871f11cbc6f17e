#include <doctest.h>

#include <cmath>
#include <cstring>

#include "glt/dense_matrix.hpp"
#include "oracles.hpp"

using glt::cplx;
using glt::DenseMatrix;

namespace {

bool bit_equal(const DenseMatrix& a, const DenseMatrix& b) {
    return a.rows() == b.rows() && a.cols() == b.cols() &&
           std::memcmp(a.entries().data(), b.entries().data(),
                       a.entries().size() * sizeof(cplx)) == 0;
}

}  // namespace

TEST_CASE("constructors reject invalid data") {
    CHECK_THROWS_AS(DenseMatrix(2, 2, {1.0, 2.0, 3.0}), glt::DimensionError);
    CHECK_THROWS_AS(DenseMatrix(1, 2, {cplx(0.0), cplx(HUGE_VAL, 0.0)}), glt::NumericError);
    CHECK_THROWS_AS(DenseMatrix(1, 1, {cplx(std::nan(""), 0.0)}), glt::NumericError);
    DenseMatrix ok(2, 2, {1.0, 2.0, 3.0, 4.0});
    CHECK(ok(1, 0) == cplx(3.0));
}

TEST_CASE("kron identity block case") {
    DenseMatrix b = oracle::random_complex(2, 2, 7);
    DenseMatrix k = kron(DenseMatrix::identity(2), b);
    REQUIRE(k.rows() == 4);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            CHECK(k(i, j) == b(i, j));
            CHECK(k(2 + i, 2 + j) == b(i, j));
            CHECK(k(i, 2 + j) == cplx(0.0));
            CHECK(k(2 + i, j) == cplx(0.0));
        }
}

TEST_CASE("kron scalar blocks") {
    DenseMatrix d(2, 2);
    d(0, 0) = 0.5;
    d(1, 1) = 1.0;
    DenseMatrix one(1, 1);
    one(0, 0) = 1.0;
    DenseMatrix k = kron(d, one);
    CHECK(k.rows() == 2);
    CHECK(k(0, 0) == cplx(0.5));
    CHECK(k(1, 1) == cplx(1.0));
    CHECK(k(0, 1) == cplx(0.0));
}

TEST_CASE("kron nilpotent example expands the definition") {
    DenseMatrix a(2, 2);
    a(0, 1) = 1.0;
    DenseMatrix two(1, 1);
    two(0, 0) = 2.0;
    DenseMatrix k = kron(a, two);
    CHECK(k(0, 1) == cplx(2.0));
    CHECK(k(0, 0) == cplx(0.0));
    CHECK(k(1, 0) == cplx(0.0));
    CHECK(k(1, 1) == cplx(0.0));
}

TEST_CASE("kron shape law and mixed product") {
    DenseMatrix a = oracle::random_complex(2, 2, 1);
    DenseMatrix b = oracle::random_complex(3, 3, 2);
    DenseMatrix c = oracle::random_complex(2, 2, 3);
    DenseMatrix d = oracle::random_complex(3, 3, 4);
    DenseMatrix lhs = kron(a, b) * kron(c, d);
    DenseMatrix rhs = kron(a * c, b * d);
    REQUIRE(lhs.rows() == a.rows() * b.rows());
    REQUIRE(lhs.cols() == c.cols() * d.cols());
    CHECK((lhs - rhs).max_abs() < 1e-12);
}

TEST_CASE("direct_sum_pad") {
    DenseMatrix i2 = DenseMatrix::identity(2);
    DenseMatrix p = direct_sum_pad(i2, 3);
    CHECK(p.rows() == 3);
    CHECK(p(0, 0) == cplx(1.0));
    CHECK(p(1, 1) == cplx(1.0));
    CHECK(p(2, 2) == cplx(0.0));
    CHECK(bit_equal(direct_sum_pad(i2, 2), i2));

    DenseMatrix block = oracle::random_complex(4, 4, 5);
    DenseMatrix padded = direct_sum_pad(block, 5);
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(padded(4, i) == cplx(0.0));
        CHECK(padded(i, 4) == cplx(0.0));
    }
    CHECK(padded(2, 3) == block(2, 3));
    CHECK_THROWS_AS(direct_sum_pad(block, 3), glt::DimensionError);
}

TEST_CASE("frobenius_inner basic values") {
    DenseMatrix i3 = DenseMatrix::identity(3);
    CHECK(frobenius_inner(i3, i3) == cplx(3.0));

    DenseMatrix a = oracle::random_complex(4, 4, 11);
    cplx self = frobenius_inner(a, a);
    CHECK(self.real() == doctest::Approx(a.frobenius_norm_sq()).epsilon(1e-14));
    CHECK(self.imag() == 0.0);

    // shift against the identity: disjoint supports
    DenseMatrix s(3, 3);
    s(1, 0) = 1.0;
    s(2, 1) = 1.0;
    CHECK(frobenius_inner(s, i3) == cplx(0.0));

    CHECK_THROWS_AS(frobenius_inner(a, i3), glt::DimensionError);
}

TEST_CASE("frobenius_inner conjugate symmetry") {
    DenseMatrix a = oracle::random_complex(5, 5, 21);
    DenseMatrix b = oracle::random_complex(5, 5, 22);
    CHECK(std::abs(frobenius_inner(a, b) - std::conj(frobenius_inner(b, a))) < 1e-13);
}

TEST_CASE("adjoint and structure detection") {
    DenseMatrix h = oracle::random_hermitian(5, 33);
    CHECK(h.is_hermitian_exact());
    CHECK(h.adjoint() == h);  // value equality: conj flips zero signs
    DenseMatrix g = oracle::random_complex(5, 5, 34);
    CHECK(!g.is_hermitian_exact());

    DenseMatrix t = oracle::random_real_symmetric_tridiagonal(6, 35);
    CHECK(t.is_real_symmetric_tridiagonal());
    t(0, 5) = 1e-30;
    CHECK(!t.is_real_symmetric_tridiagonal());
}
