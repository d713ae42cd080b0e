#include "opq/entropy.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "opq/errors.hpp"
#include "opq/oracle.hpp"

namespace opq {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_seconds(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// p_n and p_n' together, by differentiating the three-term recurrence.
void evaluate_with_derivative(const RecurrenceCoefficients& coeffs,
                              std::size_t n, double x, double& p, double& dp) {
    double pm = 0.0, pc = 1.0;   // p_{k-1}, p_k
    double dm = 0.0, dc = 0.0;   // their derivatives
    for (std::size_t k = 0; k < n; ++k) {
        const double ak = k >= 1 ? coeffs.a(k) : 0.0;
        const double ak1 = coeffs.a(k + 1);
        const double xb = x - coeffs.b(k);
        const double pn = (xb * pc - ak * pm) / ak1;
        const double dn = (xb * dc + pc - ak * dm) / ak1;
        pm = pc;
        pc = pn;
        dm = dc;
        dc = dn;
    }
    p = pc;
    dp = dc;
}

}  // namespace

const char* method_name(EntropyMethod method) {
    switch (method) {
        case EntropyMethod::Generic: return "generic";
        case EntropyMethod::GegenbauerTerminating: return "gegenbauer-terminating";
        case EntropyMethod::GegenbauerBounded: return "gegenbauer-bounded";
    }
    return "generic";
}

double mutual_energy(const ChebyshevMomentSequence& c,
                     const ChebyshevMomentSequence& m, std::size_t N) {
    if (c.kind != MomentKind::ZeroCounting ||
        m.kind != MomentKind::SquaredPolynomial)
        throw invalid_input(
            "mutual_energy: expects (zero-counting, squared-polynomial) "
            "moment sequences in that order");
    if (c.n != m.n)
        throw invalid_input("mutual_energy: sequences describe different n (" +
                            std::to_string(c.n) + " vs " + std::to_string(m.n) +
                            ")");
    if (c.N < N || m.N < N)
        throw invalid_input("mutual_energy: requested N = " + std::to_string(N) +
                            " exceeds available moments (c: " +
                            std::to_string(c.N) + ", m: " + std::to_string(m.N) +
                            ")");
    double s = 0.0;
    for (std::size_t k = 1; k <= N; ++k)
        s += c.values[k] * m.values[k] / static_cast<double>(k);
    return std::numbers::ln2 + 2.0 * s;
}

EntropyResult entropy_from_series(const RecurrenceCoefficients& coeffs,
                                  std::size_t n, std::size_t N) {
    const auto t0 = Clock::now();
    if (n < 1) throw invalid_input("entropy_from_series: n must be at least 1");
    if (N < 1) throw invalid_input("entropy_from_series: N must be at least 1");

    double value;
    if (coeffs.symmetric()) {
        // Even-only regrouping: N counts even-series terms (degree 2N).
        const ChebyshevMomentSequence c =
            even_trace_moments(minor(coeffs, n), N);
        const ChebyshevMomentSequence m = even_column_moments(coeffs, n, N);
        double s = 0.0;
        for (std::size_t k = 1; k <= N; ++k)
            s += c.values[2 * k] * m.values[2 * k] / static_cast<double>(k);
        value = log_leading_term(coeffs, n) +
                2.0 * static_cast<double>(n) * s;
    } else {
        const ChebyshevMomentSequence c = trace_moments(minor(coeffs, n), N);
        const ChebyshevMomentSequence m = column_moments(coeffs, n, N);
        double s = 0.0;
        for (std::size_t k = 1; k <= N; ++k)
            s += c.values[k] * m.values[k] / static_cast<double>(k);
        value = log_leading_term(coeffs, n) +
                4.0 * static_cast<double>(n) * s;
    }

    EntropyResult res;
    res.n = n;
    res.value = value;
    res.truncation_N = N;
    res.method = EntropyMethod::Generic;
    res.seconds = elapsed_seconds(t0);
    return res;
}

RemainderCertificate generic_remainder_bound(const RecurrenceCoefficients& coeffs,
                                             std::size_t n, std::size_t N,
                                             std::size_t grid_size) {
    if (N < 1)
        throw invalid_input("generic_remainder_bound: N must be at least 1");
    if (grid_size == 0) grid_size = 4 * n + 64;
    if (grid_size < 2)
        throw invalid_input(
            "generic_remainder_bound: grid needs at least 2 points");

    const std::size_t Kq = 4 * (n + 1);
    const QuadratureRule rule = gauss_rule(coeffs, Kq);

    std::vector<double> pn2(Kq);
    for (std::size_t i = 0; i < Kq; ++i) {
        const double v =
            evaluate_polynomials(coeffs, n, rule.nodes[i]).values[n];
        pn2[i] = v * v;
    }

    // Scan sup_x int |(p_n^2(x) - p_n^2(t)) / (x - t)| dmu(t) on a
    // Chebyshev-spaced grid; the quotient degenerates to the derivative of
    // p_n^2 when x sits on a quadrature node.
    double M = 0.0;
    for (std::size_t g = 0; g < grid_size; ++g) {
        const double x = std::cos(std::numbers::pi * (2.0 * g + 1.0) /
                                  (2.0 * static_cast<double>(grid_size)));
        double p, dp;
        evaluate_with_derivative(coeffs, n, x, p, dp);
        const double px2 = p * p;
        double integral = 0.0;
        for (std::size_t i = 0; i < Kq; ++i) {
            const double dx = x - rule.nodes[i];
            const double q = std::fabs(dx) < 1e-8
                                 ? std::fabs(2.0 * p * dp)
                                 : std::fabs((px2 - pn2[i]) / dx);
            integral += rule.weights[i] * q;
        }
        if (integral > M) M = integral;
    }

    RemainderCertificate cert;
    cert.M_n_estimate = M;
    cert.N = N;
    cert.bound = 4.0 * M / (static_cast<double>(N) + 1.0);
    return cert;
}

EntropyResult entropy_to_tolerance(const RecurrenceCoefficients& coeffs,
                                   std::size_t n, double epsilon) {
    const auto t0 = Clock::now();
    if (n < 1) throw invalid_input("entropy_to_tolerance: n must be at least 1");
    if (!(epsilon > 0.0) || !std::isfinite(epsilon))
        throw invalid_input(
            "entropy_to_tolerance: epsilon must be positive and finite");

    // M_n does not depend on N, so sample it once and rescale the bound as
    // the truncation doubles.
    const RemainderCertificate cert =
        generic_remainder_bound(coeffs, n, 2 * (n + 1));
    const std::size_t cap = 64 * (n + 1);
    std::size_t N = 2 * (n + 1);
    double bound = cert.bound;
    while (bound > epsilon && N < cap) {
        N *= 2;
        bound = 4.0 * cert.M_n_estimate / (static_cast<double>(N) + 1.0);
    }
    if (bound > epsilon)
        throw numerical_error(
            "entropy_to_tolerance: sampled certificate reaches only " +
            num_str(bound) + " at the truncation cap N = " +
            std::to_string(cap) + ", short of epsilon = " +
            num_str(epsilon) +
            "; pass an explicit truncation instead");

    EntropyResult res = coeffs.symmetric()
                            ? entropy_from_series(coeffs, n, N / 2)
                            : entropy_from_series(coeffs, n, N);
    res.truncation_N = N;
    res.bound = bound;
    res.method = EntropyMethod::Generic;
    res.seconds = elapsed_seconds(t0);
    return res;
}

}  // namespace opq
