#include "opq/specfun.hpp"
#include "opq/errors.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace opq {

double SignedLog::value() const {
    if (sign == 0) return 0.0;
    return sign * std::exp(log_abs);
}

namespace {

// B_{2j} / (2j(2j-1)) for the Stirling series of ln Gamma.
const double kStirling[] = {
    1.0 / 12.0,       -1.0 / 360.0,      1.0 / 1260.0,  -1.0 / 1680.0,
    1.0 / 1188.0,     -691.0 / 360360.0, 1.0 / 156.0,   -3617.0 / 122400.0,
};

// B_{2j} / (2j) for the asymptotic series of psi.
const double kDigamma[] = {
    1.0 / 12.0,  -1.0 / 120.0,      1.0 / 252.0, -1.0 / 240.0,
    1.0 / 132.0, -691.0 / 32760.0,  1.0 / 12.0,  -3617.0 / 8160.0,
};

constexpr double kHalfLn2Pi = 0.91893853320467274178;  // ln(2*pi)/2

bool is_nonpositive_integer(double x) {
    return x <= 0.0 && x == std::floor(x);
}

}  // namespace

double ln_gamma(double x) {
    if (!(x > 0.0))
        throw invalid_input("ln_gamma: argument must be positive, got " + num_str(x));
    // Shift the argument above 10, where eight Stirling terms give ~1e-18.
    double shift = 0.0;
    while (x < 10.0) {
        shift += std::log(x);
        x += 1.0;
    }
    const double r = 1.0 / (x * x);
    double series = kStirling[7];
    for (int j = 6; j >= 0; --j) series = series * r + kStirling[j];
    return (x - 0.5) * std::log(x) - x + kHalfLn2Pi + series / x - shift;
}

double digamma(double x) {
    if (!(x > 0.0))
        throw invalid_input("digamma: argument must be positive, got " + num_str(x));
    double shift = 0.0;
    while (x < 10.0) {
        shift += 1.0 / x;  // psi(x) = psi(x+1) - 1/x
        x += 1.0;
    }
    const double r = 1.0 / (x * x);
    double series = kDigamma[7];
    for (int j = 6; j >= 0; --j) series = series * r + kDigamma[j];
    return std::log(x) - 0.5 / x - series * r - shift;
}

SignedLog log_gamma_signed(double x) {
    if (x > 0.0) return {ln_gamma(x), +1};
    if (is_nonpositive_integer(x))
        throw invalid_input("log_gamma_signed: pole at nonpositive integer " + num_str(x));
    // Reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x).  1-x > 1 here.
    // sin(pi x) via the fractional part to keep the argument reduction exact.
    const double frac = x - std::floor(x);  // in (0,1)
    const double sin_abs = std::sin(M_PI * frac);  // |sin(pi x)|
    const double log_abs = std::log(M_PI) - std::log(sin_abs) - ln_gamma(1.0 - x);
    // sign(Gamma(x)) = sign(sin(pi x)) = (-1)^floor(x):
    // negative on (-1,0), positive on (-2,-1), and so on alternating.
    const long fl = static_cast<long>(std::floor(x));
    return {log_abs, (fl % 2 == 0) ? +1 : -1};
}

SignedLog log_pochhammer_signed(double a, long k) {
    if (k < 0)
        throw invalid_input("log_pochhammer_signed: k must be nonnegative, got " + std::to_string(k));
    if (k == 0) return {0.0, +1};
    if (a > 0.0) return {ln_gamma(a + k) - ln_gamma(a), +1};
    if (is_nonpositive_integer(a)) {
        // Factors a, a+1, ..., a+k-1 are integers; the product is zero as
        // soon as the run crosses 0, i.e. when k > -a.
        if (static_cast<double>(k) > -a)
            return {-std::numeric_limits<double>::infinity(), 0};
        // All k factors are negative integers: |(a)_k| = (-a)! / (-a-k)!.
        const double m = -a;
        const double log_abs = ln_gamma(m + 1.0) - ln_gamma(m - k + 1.0);
        return {log_abs, (k % 2 == 0) ? +1 : -1};
    }
    // Negative non-integer a: exactly min(k, ceil(-a)) factors are negative.
    const long negatives = std::min(k, static_cast<long>(std::ceil(-a)));
    const int sign = (negatives % 2 == 0) ? +1 : -1;
    const double log_abs = log_gamma_signed(a + k).log_abs - log_gamma_signed(a).log_abs;
    return {log_abs, sign};
}

}  // namespace opq
