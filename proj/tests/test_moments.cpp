#include <doctest.h>

#include <cmath>
#include <cstddef>
#include <vector>

#include "opq/errors.hpp"
#include "opq/gegenbauer.hpp"
#include "opq/moments.hpp"
#include "opq/recurrence.hpp"
#include "opq/specfun.hpp"

using doctest::Approx;
using opq::ChebyshevMomentSequence;

namespace {

// int x^{2s} against the normalized ultraspherical weight:
// Gamma(lambda+1) Gamma(s+1/2) / (sqrt(pi) Gamma(s+lambda+1))
double even_power_moment(double lambda, int s) {
    return std::exp(opq::ln_gamma(lambda + 1.0) + opq::ln_gamma(s + 0.5) -
                    0.5 * std::log(std::acos(-1.0)) -
                    opq::ln_gamma(s + lambda + 1.0));
}

}  // namespace

TEST_CASE("trace moments against the explicit second-kind zeros") {
    // p_n for the lambda = 1 weight is U_n, zeros cos(j pi / (n+1)):
    // c_k = (1/n) sum_j cos(k j pi / (n+1))
    const std::size_t n = 7;
    opq::RecurrenceCoefficients u(std::vector<double>(n, 0.5));
    auto c = opq::trace_moments(opq::minor(u, n), 24);
    REQUIRE(c.kind == opq::MomentKind::ZeroCounting);
    REQUIRE(c.n == n);
    REQUIRE(c.N == 24);
    REQUIRE(c.values.size() == 25);
    CHECK(c.values[0] == 1.0);
    const double pi = std::acos(-1.0);
    for (std::size_t k = 1; k <= 24; ++k) {
        double ref = 0.0;
        for (std::size_t j = 1; j <= n; ++j)
            ref += std::cos(k * j * pi / (n + 1.0));
        ref /= n;
        CHECK(c.values[k] == Approx(ref).epsilon(1e-13).scale(1.0));
    }
}

TEST_CASE("column moments at degree zero are weight moments") {
    // m_{k,0} = int T_k dmu; assembled from the even power moments
    for (double lambda : {0.5, 2.0, 3.7}) {
        const opq::GegenbauerParams p(lambda);
        auto coeffs = opq::gegenbauer_coefficients(p, 1 + 5);
        auto m = opq::column_moments(coeffs, 0, 8);
        CHECK(m.kind == opq::MomentKind::SquaredPolynomial);
        CHECK(m.values[0] == 1.0);
        // T_2 = 2x^2 - 1, T_4 = 8x^4 - 8x^2 + 1, T_6 = 32x^6 - 48x^4 + 18x^2 - 1
        const double x2 = even_power_moment(lambda, 1);
        const double x4 = even_power_moment(lambda, 2);
        const double x6 = even_power_moment(lambda, 3);
        CHECK(m.values[2] == Approx(2 * x2 - 1).epsilon(1e-14).scale(1.0));
        CHECK(m.values[4] ==
              Approx(8 * x4 - 8 * x2 + 1).epsilon(1e-13).scale(1.0));
        CHECK(m.values[6] ==
              Approx(32 * x6 - 48 * x4 + 18 * x2 - 1).epsilon(1e-13).scale(1.0));
        for (std::size_t k : {1, 3, 5, 7})
            CHECK(m.values[k] == Approx(0.0).scale(1.0).epsilon(1e-14));
    }
    // spot values: lambda = 1/2 gives int x^6 = 1/7, lambda = 2 gives
    // int x^4 = 1/16
    CHECK(even_power_moment(0.5, 3) == Approx(1.0 / 7.0).epsilon(1e-14));
    CHECK(even_power_moment(2.0, 2) == Approx(0.0625).epsilon(1e-14));
}

TEST_CASE("even fast paths match the general recurrences") {
    const opq::GegenbauerParams p(1.5);
    const std::size_t n = 6, K = 9;
    auto coeffs = opq::gegenbauer_coefficients(p, n + 1 + K);

    auto c_even = opq::even_trace_moments(opq::minor(coeffs, n), K);
    auto c_full = opq::trace_moments(opq::minor(coeffs, n), 2 * K);
    REQUIRE(c_even.N == 2 * K);
    REQUIRE(c_even.values.size() == 2 * K + 1);
    for (std::size_t k = 0; k <= 2 * K; ++k) {
        if (k % 2) {
            CHECK(c_even.values[k] == 0.0);  // exact zeros by construction
            CHECK(c_full.values[k] == Approx(0.0).scale(1.0).epsilon(1e-13));
        } else {
            CHECK(c_even.values[k] ==
                  Approx(c_full.values[k]).epsilon(1e-13).scale(1.0));
        }
    }

    auto m_even = opq::even_column_moments(coeffs, n, K);
    auto m_full = opq::column_moments(coeffs, n, 2 * K);
    for (std::size_t k = 0; k <= 2 * K; ++k) {
        if (k % 2)
            CHECK(m_even.values[k] == 0.0);
        else
            CHECK(m_even.values[k] ==
                  Approx(m_full.values[k]).epsilon(1e-13).scale(1.0));
    }

    // a nonzero diagonal must be rejected by the even-only paths
    opq::RecurrenceCoefficients shifted({0.45, 0.45, 0.45, 0.45, 0.45, 0.45},
                                        {0.1, 0.1, 0.1, 0.1, 0.1, 0.1});
    CHECK_THROWS_AS(opq::even_trace_moments(opq::minor(shifted, 3), 1),
                    opq::invalid_input);
    CHECK_THROWS_AS(opq::even_column_moments(shifted, 2, 1), opq::invalid_input);
}

TEST_CASE("column moments are insensitive to the evaluation order") {
    // r = n + 1 + floor(N/2) already makes every truncated power exact, so
    // growing the section must not move any entry
    const opq::GegenbauerParams p(0.5);
    const std::size_t n = 4, N = 11;
    auto coeffs = opq::gegenbauer_coefficients(p, n + 1 + N);
    const std::size_t r0 = n + 1 + N / 2;
    auto base = opq::detail::column_moments_with_order(coeffs, n, N, r0);
    auto grown = opq::detail::column_moments_with_order(coeffs, n, N, r0 + 5);
    for (std::size_t k = 0; k <= N; ++k)
        CHECK(base.values[k] ==
              Approx(grown.values[k]).epsilon(1e-14).scale(1.0));
}

TEST_CASE("unit-bound monitoring") {
    ChebyshevMomentSequence s;
    s.kind = opq::MomentKind::ZeroCounting;
    s.n = 3;
    s.N = 4;
    s.values = {1.0, -0.5, 0.25, 1.0 + 1e-9, -0.1};
    CHECK(s.first_bound_violation() == 3);
    CHECK(s.first_bound_violation(1e-8) == ChebyshevMomentSequence::npos);

    s.values[3] = -1.0;
    CHECK(s.first_bound_violation() == ChebyshevMomentSequence::npos);

    // real sequences stay inside the bound
    const opq::GegenbauerParams p(3.7);
    auto coeffs = opq::gegenbauer_coefficients(p, 40);
    auto m = opq::even_column_moments(coeffs, 8, 15);
    CHECK(m.first_bound_violation() == ChebyshevMomentSequence::npos);
}

TEST_CASE("argument validation") {
    opq::RecurrenceCoefficients u(std::vector<double>(10, 0.5));
    CHECK_THROWS_AS(opq::trace_moments(opq::minor(u, 4), 0), opq::invalid_input);
    CHECK_THROWS_AS(opq::column_moments(u, 4, 0), opq::invalid_input);
    // not enough coefficient rows for the requested section
    CHECK_THROWS_AS(opq::column_moments(u, 4, 30), opq::invalid_input);
    CHECK_THROWS_AS(opq::even_column_moments(u, 4, 20), opq::invalid_input);
}
