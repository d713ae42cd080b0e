#include "opq/banded.hpp"
#include "opq/errors.hpp"

#include <string>

namespace opq {

void apply_tridiagonal(const double* d, const double* e, std::size_t n,
                       const double* x, double* y) {
    if (n == 1) {
        y[0] = d[0] * x[0];
        return;
    }
    y[0] = d[0] * x[0] + e[0] * x[1];
    for (std::size_t i = 1; i + 1 < n; ++i)
        y[i] = e[i - 1] * x[i - 1] + d[i] * x[i] + e[i] * x[i + 1];
    y[n - 1] = e[n - 2] * x[n - 2] + d[n - 1] * x[n - 1];
}

void cheb_step_tridiagonal(const double* d, const double* e, std::size_t n,
                           const double* cur, double* prev) {
    if (n == 1) {
        prev[0] = 2.0 * (d[0] * cur[0]) - prev[0];
        return;
    }
    prev[0] = 2.0 * (d[0] * cur[0] + e[0] * cur[1]) - prev[0];
    for (std::size_t i = 1; i + 1 < n; ++i)
        prev[i] = 2.0 * (e[i - 1] * cur[i - 1] + d[i] * cur[i] + e[i] * cur[i + 1]) - prev[i];
    prev[n - 1] = 2.0 * (e[n - 2] * cur[n - 2] + d[n - 1] * cur[n - 1]) - prev[n - 1];
}

EvenSquaredBands even_squared_bands(const std::vector<double>& offdiag,
                                    std::size_t r) {
    if (r < 1)
        throw invalid_input("even_squared_bands: order must be >= 1");
    if (offdiag.size() + 1 < r)
        throw invalid_input("even_squared_bands: order " + std::to_string(r) + " needs " +
                            std::to_string(r - 1) + " offdiagonal entries, got " +
                            std::to_string(offdiag.size()));
    EvenSquaredBands B;
    B.diag.resize(r);
    if (r == 1) {
        B.diag[0] = -1.0;  // 2*0^2 - 1
        return B;
    }
    B.diag[0] = 2.0 * offdiag[0] * offdiag[0] - 1.0;
    for (std::size_t i = 1; i + 1 < r; ++i)
        B.diag[i] = 2.0 * (offdiag[i - 1] * offdiag[i - 1] + offdiag[i] * offdiag[i]) - 1.0;
    B.diag[r - 1] = 2.0 * offdiag[r - 2] * offdiag[r - 2] - 1.0;
    if (r >= 3) {
        B.off2.resize(r - 2);
        for (std::size_t i = 0; i + 2 < r; ++i)
            B.off2[i] = 2.0 * offdiag[i] * offdiag[i + 1];
    }
    return B;
}

void apply_even(const EvenSquaredBands& B, const double* x, double* y) {
    const std::size_t r = B.diag.size();
    const double* D = B.diag.data();
    const double* S = B.off2.data();
    if (r <= 2) {
        for (std::size_t i = 0; i < r; ++i) y[i] = D[i] * x[i];
        return;
    }
    y[0] = D[0] * x[0] + S[0] * x[2];
    if (r >= 4) y[1] = D[1] * x[1] + S[1] * x[3];
    else        y[1] = D[1] * x[1];
    for (std::size_t i = 2; i + 2 < r; ++i)
        y[i] = S[i - 2] * x[i - 2] + D[i] * x[i] + S[i] * x[i + 2];
    if (r >= 4) y[r - 2] = S[r - 4] * x[r - 4] + D[r - 2] * x[r - 2];
    y[r - 1] = S[r - 3] * x[r - 3] + D[r - 1] * x[r - 1];
}

void cheb_step_even(const EvenSquaredBands& B, const double* cur, double* prev) {
    const std::size_t r = B.diag.size();
    const double* D = B.diag.data();
    const double* S = B.off2.data();
    if (r <= 2) {
        for (std::size_t i = 0; i < r; ++i)
            prev[i] = 2.0 * (D[i] * cur[i]) - prev[i];
        return;
    }
    prev[0] = 2.0 * (D[0] * cur[0] + S[0] * cur[2]) - prev[0];
    if (r >= 4) prev[1] = 2.0 * (D[1] * cur[1] + S[1] * cur[3]) - prev[1];
    else        prev[1] = 2.0 * (D[1] * cur[1]) - prev[1];
    for (std::size_t i = 2; i + 2 < r; ++i)
        prev[i] = 2.0 * (S[i - 2] * cur[i - 2] + D[i] * cur[i] + S[i] * cur[i + 2]) - prev[i];
    if (r >= 4) prev[r - 2] = 2.0 * (S[r - 4] * cur[r - 4] + D[r - 2] * cur[r - 2]) - prev[r - 2];
    prev[r - 1] = 2.0 * (S[r - 3] * cur[r - 3] + D[r - 1] * cur[r - 1]) - prev[r - 1];
}

}  // namespace opq
