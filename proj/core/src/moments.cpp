#include "opq/moments.hpp"
#include "opq/banded.hpp"
#include "opq/errors.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace opq {

namespace {

// Neumaier variant of Kahan summation; traces sum n terms of mixed sign.
struct CompensatedSum {
    double s = 0.0, c = 0.0;
    void add(double v) {
        const double t = s + v;
        if (std::fabs(s) >= std::fabs(v))
            c += (s - t) + v;
        else
            c += (v - t) + s;
        s = t;
    }
    double value() const { return s + c; }
};

void require_zero_diagonal(const std::vector<double>& diag, const char* where) {
    for (std::size_t i = 0; i < diag.size(); ++i)
        if (diag[i] != 0.0)
            throw invalid_input(std::string(where) + ": diagonal entry b_" + std::to_string(i) +
                                " is nonzero; the even-only path needs a symmetric measure -- "
                                "use the general trace_moments/column_moments instead");
}

}  // namespace

std::size_t ChebyshevMomentSequence::first_bound_violation(double tol) const {
    for (std::size_t k = 0; k < values.size(); ++k)
        if (std::fabs(values[k]) > 1.0 + tol) return k;
    return npos;
}

ChebyshevMomentSequence trace_moments(const JacobiPrincipalMinor& minor, std::size_t N) {
    if (N < 1) throw invalid_input("trace_moments: N must be >= 1");
    const std::size_t n = minor.n;
    const double* d = minor.diag.data();
    const double* e = minor.offdiag.data();

    ChebyshevMomentSequence seq;
    seq.kind = MomentKind::ZeroCounting;
    seq.n = n;
    seq.N = N;
    seq.values.assign(N + 1, 0.0);
    seq.values[0] = 1.0;

    // Column-major batch: column j of 'prev' holds T_{k-1}(J) e_j, of 'cur'
    // holds T_k(J) e_j.  Start with T_0 = I, T_1 = J.
    std::vector<double> prev(n * n, 0.0), cur(n * n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        prev[j * n + j] = 1.0;
        cur[j * n + j] = d[j];
        if (j >= 1) cur[j * n + (j - 1)] = e[j - 1];
        if (j + 1 < n) cur[j * n + (j + 1)] = e[j];
    }

    CompensatedSum tr1;
    for (std::size_t j = 0; j < n; ++j) tr1.add(cur[j * n + j]);
    seq.values[1] = tr1.value() / static_cast<double>(n);

    for (std::size_t k = 2; k <= N; ++k) {
        for (std::size_t j = 0; j < n; ++j)
            cheb_step_tridiagonal(d, e, n, cur.data() + j * n, prev.data() + j * n);
        prev.swap(cur);
        CompensatedSum tr;
        for (std::size_t j = 0; j < n; ++j) tr.add(cur[j * n + j]);
        seq.values[k] = tr.value() / static_cast<double>(n);
    }
    return seq;
}

ChebyshevMomentSequence even_trace_moments(const JacobiPrincipalMinor& minor, std::size_t K) {
    if (K < 1) throw invalid_input("even_trace_moments: K must be >= 1");
    require_zero_diagonal(minor.diag, "even_trace_moments");
    const std::size_t n = minor.n;
    const EvenSquaredBands B = even_squared_bands(minor.offdiag, n);

    ChebyshevMomentSequence seq;
    seq.kind = MomentKind::ZeroCounting;
    seq.n = n;
    seq.N = 2 * K;
    seq.values.assign(2 * K + 1, 0.0);
    seq.values[0] = 1.0;

    std::vector<double> prev(n * n, 0.0), cur(n * n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        prev[j * n + j] = 1.0;
        cur[j * n + j] = B.diag[j];
        if (j >= 2) cur[j * n + (j - 2)] = B.off2[j - 2];
        if (j + 2 < n) cur[j * n + (j + 2)] = B.off2[j];
    }

    CompensatedSum tr1;
    for (std::size_t j = 0; j < n; ++j) tr1.add(cur[j * n + j]);
    seq.values[2] = tr1.value() / static_cast<double>(n);

    for (std::size_t k = 2; k <= K; ++k) {
        for (std::size_t j = 0; j < n; ++j)
            cheb_step_even(B, cur.data() + j * n, prev.data() + j * n);
        prev.swap(cur);
        CompensatedSum tr;
        for (std::size_t j = 0; j < n; ++j) tr.add(cur[j * n + j]);
        seq.values[2 * k] = tr.value() / static_cast<double>(n);
    }
    return seq;
}

namespace detail {

ChebyshevMomentSequence column_moments_with_order(const RecurrenceCoefficients& coeffs,
                                                  std::size_t n, std::size_t N,
                                                  std::size_t r) {
    if (N < 1) throw invalid_input("column_moments: N must be >= 1");
    if (r <= n) throw invalid_input("column_moments: order r must exceed n");
    if (coeffs.size() < r)
        throw invalid_input("column_moments: degree " + std::to_string(n) + " at N = " +
                            std::to_string(N) + " needs coefficients through index " +
                            std::to_string(r) + ", only " + std::to_string(coeffs.size()) +
                            " available");

    const JacobiPrincipalMinor J = minor(coeffs, r);
    const double* d = J.diag.data();
    const double* e = J.offdiag.data();

    ChebyshevMomentSequence seq;
    seq.kind = MomentKind::SquaredPolynomial;
    seq.n = n;
    seq.N = N;
    seq.values.assign(N + 1, 0.0);
    seq.values[0] = 1.0;

    std::vector<double> prev(r, 0.0), cur(r, 0.0);
    prev[n] = 1.0;                      // e_n
    apply_tridiagonal(d, e, r, prev.data(), cur.data());  // J e_n
    seq.values[1] = cur[n];
    for (std::size_t k = 2; k <= N; ++k) {
        cheb_step_tridiagonal(d, e, r, cur.data(), prev.data());
        prev.swap(cur);
        seq.values[k] = cur[n];
    }
    return seq;
}

}  // namespace detail

ChebyshevMomentSequence column_moments(const RecurrenceCoefficients& coeffs,
                                       std::size_t n, std::size_t N) {
    return detail::column_moments_with_order(coeffs, n, N, n + 1 + N / 2);
}

ChebyshevMomentSequence even_column_moments(const RecurrenceCoefficients& coeffs,
                                            std::size_t n, std::size_t K) {
    if (K < 1) throw invalid_input("even_column_moments: K must be >= 1");
    if (!coeffs.symmetric())
        throw invalid_input("even_column_moments: coefficients have nonzero b; "
                            "use the general column_moments instead");
    const std::size_t r = n + 1 + K;
    if (coeffs.size() < r - 1)
        throw invalid_input("even_column_moments: degree " + std::to_string(n) + " at K = " +
                            std::to_string(K) + " needs coefficients through index " +
                            std::to_string(r - 1) + ", only " + std::to_string(coeffs.size()) +
                            " available");
    const EvenSquaredBands B = even_squared_bands(coeffs.a_all(), r);

    ChebyshevMomentSequence seq;
    seq.kind = MomentKind::SquaredPolynomial;
    seq.n = n;
    seq.N = 2 * K;
    seq.values.assign(2 * K + 1, 0.0);
    seq.values[0] = 1.0;

    std::vector<double> prev(r, 0.0), cur(r, 0.0);
    prev[n] = 1.0;
    apply_even(B, prev.data(), cur.data());
    seq.values[2] = cur[n];
    for (std::size_t k = 2; k <= K; ++k) {
        cheb_step_even(B, cur.data(), prev.data());
        prev.swap(cur);
        seq.values[2 * k] = cur[n];
    }
    return seq;
}

}  // namespace opq
