#include "glt/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace glt {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kSafeMin = std::numeric_limits<double>::min();

// Number of eigenvalues of the tridiagonal matrix strictly below x,
// counted through the signs of the Sturm sequence of leading pivots.
std::size_t sturm_count(const std::vector<double>& d, const std::vector<double>& e2, double x,
                        double pivmin) {
    std::size_t count = 0;
    double q = 1.0;
    for (std::size_t i = 0; i < d.size(); ++i) {
        q = (i == 0) ? d[0] - x : d[i] - x - e2[i - 1] / q;
        if (std::abs(q) < pivmin) q = -pivmin;
        if (q < 0.0) ++count;
    }
    return count;
}

struct Interval {
    double lo, hi;
    std::size_t clo, chi;  // eigenvalue indices in (lo, hi] are clo..chi-1
};

}  // namespace

EigenResult tridiagonal_eigenvalues(const std::vector<double>& diag,
                                    const std::vector<double>& offdiag, double tol) {
    const std::size_t n = diag.size();
    if (n == 0) return {};
    if (offdiag.size() + 1 != n)
        throw DimensionError("offdiag length must be diag length - 1");

    std::vector<double> e2(n > 1 ? n - 1 : 0);
    double e2max = 1.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        e2[i] = offdiag[i] * offdiag[i];
        e2max = std::max(e2max, e2[i]);
    }
    const double pivmin = kSafeMin / kEps * e2max;

    // Gershgorin enclosure of the whole spectrum.
    double lo = diag[0], hi = diag[0];
    for (std::size_t i = 0; i < n; ++i) {
        double r = 0.0;
        if (i > 0) r += std::abs(offdiag[i - 1]);
        if (i + 1 < n) r += std::abs(offdiag[i]);
        lo = std::min(lo, diag[i] - r);
        hi = std::max(hi, diag[i] + r);
    }
    double scale = std::max(std::abs(lo), std::abs(hi));
    double widen = 2.0 * kEps * scale + 2.0 * pivmin;
    lo -= widen;
    hi += widen;

    std::vector<double> vals(n);
    double worst = 0.0;
    std::vector<Interval> stack;
    stack.push_back({lo, hi, sturm_count(diag, e2, lo, pivmin), sturm_count(diag, e2, hi, pivmin)});
    // Gershgorin guarantees all n eigenvalues inside; force the counts.
    stack.back().clo = 0;
    stack.back().chi = n;

    while (!stack.empty()) {
        Interval iv = stack.back();
        stack.pop_back();
        if (iv.chi <= iv.clo) continue;
        double width = iv.hi - iv.lo;
        double stop = std::max(tol, kEps * (std::abs(iv.lo) + std::abs(iv.hi)) + 2.0 * pivmin);
        if (width <= stop) {
            double mid = 0.5 * (iv.lo + iv.hi);
            for (std::size_t k = iv.clo; k < iv.chi; ++k) vals[k] = mid;
            worst = std::max(worst, 0.5 * width);
            continue;
        }
        double mid = 0.5 * (iv.lo + iv.hi);
        std::size_t cmid = sturm_count(diag, e2, mid, pivmin);
        cmid = std::clamp(cmid, iv.clo, iv.chi);
        if (cmid > iv.clo) stack.push_back({iv.lo, mid, iv.clo, cmid});
        if (cmid < iv.chi) stack.push_back({mid, iv.hi, cmid, iv.chi});
    }

    // vals is ascending by eigenvalue index; report non-increasing.
    std::reverse(vals.begin(), vals.end());
    return {std::move(vals), worst};
}

namespace {

// One cyclic Jacobi pass over the strict upper triangle of the Hermitian
// matrix held in `a` (full storage, kept numerically Hermitian throughout).
void jacobi_sweep(DenseMatrix& a, double thresh) {
    const std::size_t n = a.rows();
    for (std::size_t p = 0; p + 1 < n; ++p) {
        for (std::size_t q = p + 1; q < n; ++q) {
            cplx apq = a(p, q);
            double mag = std::abs(apq);
            if (mag <= thresh) continue;

            double app = a(p, p).real();
            double aqq = a(q, q).real();
            cplx z = std::conj(apq) / mag;  // brings the pivot to |apq|
            double tau = (aqq - app) / (2.0 * mag);
            double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
            double c = 1.0 / std::sqrt(1.0 + t * t);
            double s = t * c;

            // U is the identity outside rows/cols p,q; on them:
            //   U[p,p] = c        U[p,q] = s
            //   U[q,p] = -s*z     U[q,q] = c*z
            const cplx uqp = -s * z, uqq = c * z;

            // A <- U* A U: columns first, then rows.
            for (std::size_t i = 0; i < n; ++i) {
                cplx aip = a(i, p), aiq = a(i, q);
                a(i, p) = c * aip + uqp * aiq;
                a(i, q) = s * aip + uqq * aiq;
            }
            for (std::size_t j = 0; j < n; ++j) {
                cplx apj = a(p, j), aqj = a(q, j);
                a(p, j) = c * apj + std::conj(uqp) * aqj;
                a(q, j) = s * apj + std::conj(uqq) * aqj;
            }
            a(p, q) = 0.0;
            a(q, p) = 0.0;
            a(p, p) = a(p, p).real();
            a(q, q) = a(q, q).real();
        }
    }
}

double offdiag_norm(const DenseMatrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

EigenResult jacobi_eigenvalues(const DenseMatrix& input) {
    DenseMatrix a = input;
    const std::size_t n = a.rows();
    // Symmetrize once so rounding asymmetry cannot drift.
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = a(i, i).real();
        for (std::size_t j = i + 1; j < n; ++j) {
            cplx v = 0.5 * (a(i, j) + std::conj(a(j, i)));
            a(i, j) = v;
            a(j, i) = std::conj(v);
        }
    }
    const double fnorm = a.frobenius_norm();
    const double target = 1e-12 * fnorm;
    const int max_sweeps = 100;

    int sweep = 0;
    double off = offdiag_norm(a);
    while (off > target && sweep < max_sweeps) {
        // Annihilate everything above a threshold that shrinks with off(A).
        double thresh = (sweep < 3) ? 0.2 * off / (double)(n * n) : 0.0;
        jacobi_sweep(a, thresh);
        off = offdiag_norm(a);
        ++sweep;
    }
    if (off > target)
        throw ConvergenceError("Jacobi did not converge in " + std::to_string(max_sweeps) +
                               " sweeps (off-diagonal " + std::to_string(off) + ")");

    std::vector<double> vals(n);
    for (std::size_t i = 0; i < n; ++i) vals[i] = a(i, i).real();
    std::stable_sort(vals.begin(), vals.end(), std::greater<double>());
    return {std::move(vals), std::max(off, target)};
}

}  // namespace

EigenResult hermitian_eigenvalues(const DenseMatrix& a, double tol) {
    if (!a.square()) throw DimensionError("hermitian_eigenvalues requires a square matrix");
    if (a.rows() == 0) return {};
    const double herm_tol = std::max(tol, 1e-10) * (1.0 + a.frobenius_norm());
    if (!a.is_hermitian(herm_tol))
        throw DomainError("matrix is not Hermitian within tolerance");

    if (a.is_real_symmetric_tridiagonal()) {
        const std::size_t n = a.rows();
        std::vector<double> d(n), e(n > 1 ? n - 1 : 0);
        for (std::size_t i = 0; i < n; ++i) d[i] = a(i, i).real();
        for (std::size_t i = 0; i + 1 < n; ++i) e[i] = a(i, i + 1).real();
        return tridiagonal_eigenvalues(d, e, tol);
    }
    return jacobi_eigenvalues(a);
}

EigenResult singular_values(const DenseMatrix& a, double tol) {
    if (a.rows() == 0 || a.cols() == 0) return {};

    EigenResult eig;
    if (a.square() && a.is_hermitian_exact()) {
        eig = hermitian_eigenvalues(a, tol);
        for (double& v : eig.values) v = std::abs(v);
    } else {
        DenseMatrix ata = a.adjoint() * a;
        // Rounding in A*A can leave a harmless asymmetry; symmetrize view via
        // the Hermitian solver's own tolerance.
        eig = hermitian_eigenvalues(ata, tol);
        for (double& v : eig.values) v = std::sqrt(std::max(0.0, v));
        eig.residual_bound = std::sqrt(std::max(0.0, eig.residual_bound));
    }
    std::stable_sort(eig.values.begin(), eig.values.end(), std::greater<double>());
    return eig;
}

}  // namespace glt
