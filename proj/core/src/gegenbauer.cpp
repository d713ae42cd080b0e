#include "opq/gegenbauer.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "opq/errors.hpp"
#include "opq/specfun.hpp"

namespace opq {

namespace {

using Clock = std::chrono::steady_clock;
constexpr double kInf = std::numeric_limits<double>::infinity();

double elapsed_seconds(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Collects sign * exp(log) contributions and sums them under a max shift.
struct SignedLogSum {
    std::vector<double> logs;
    std::vector<int> signs;

    void add(double lg, int sg) {
        if (sg == 0 || lg == -kInf) return;
        logs.push_back(lg);
        signs.push_back(sg);
    }

    double value() const {
        if (logs.empty()) return 0.0;
        const double shift = *std::max_element(logs.begin(), logs.end());
        double acc = 0.0;
        for (std::size_t i = 0; i < logs.size(); ++i)
            acc += signs[i] * std::exp(logs[i] - shift);
        return acc * std::exp(shift);
    }
};

double log_sum_exp(const std::vector<double>& logs) {
    double shift = -kInf;
    for (double v : logs) shift = std::max(shift, v);
    if (shift == -kInf) return -kInf;
    double acc = 0.0;
    for (double v : logs) acc += std::exp(v - shift);
    return shift + std::log(acc);
}

// Integer lambda is snapped to its exact value so that termination and sign
// structure match what the rest of the module promises.
double effective_lambda(const GegenbauerParams& p) {
    return p.integer_lambda ? static_cast<double>(p.lambda_int) : p.lambda;
}

void require_majorant_domain(const GegenbauerParams& p, std::size_t n,
                             std::size_t N, const char* who) {
    if (p.integer_lambda || !(p.lambda > 0.0))
        throw invalid_input(std::string(who) +
                            ": needs non-integer lambda > 0 (integer lambda "
                            "terminates exactly; lambda <= 0 has no usable "
                            "majorant -- use generic_remainder_bound)");
    if (!(static_cast<double>(N) > static_cast<double>(n) + p.lambda))
        throw invalid_input(std::string(who) + ": N must exceed n + lambda (N = " +
                            std::to_string(N) + ", n = " + std::to_string(n) +
                            ", lambda = " + num_str(p.lambda) + ")");
}

}  // namespace

GegenbauerParams::GegenbauerParams(double lam) : lambda(lam) {
    if (!std::isfinite(lam) || !(lam > -0.5))
        throw invalid_input(
            "GegenbauerParams: lambda must be finite and greater than -1/2");
    const double nearest = std::round(lam);
    integer_lambda = nearest >= 0.0 && std::fabs(lam - nearest) <= 1e-12;
    lambda_int = integer_lambda ? static_cast<long>(nearest) : 0;
    c_lambda = std::exp(ln_gamma(lam + 1.0) - 0.5 * std::log(std::numbers::pi) -
                        ln_gamma(lam + 0.5));
}

RecurrenceCoefficients gegenbauer_coefficients(const GegenbauerParams& params,
                                               std::size_t m) {
    if (m == 0)
        throw invalid_input(
            "gegenbauer_coefficients: need at least one coefficient");
    const double lam = params.lambda;
    std::vector<double> a(m);
    a[0] = 0.5 * std::sqrt(2.0 / (1.0 + lam));
    for (std::size_t j = 2; j <= m; ++j) {
        const double dj = static_cast<double>(j);
        a[j - 1] = 0.5 * std::sqrt(dj * (dj + 2.0 * lam - 1.0) /
                                   ((dj + lam - 1.0) * (dj + lam)));
    }
    return RecurrenceCoefficients(std::move(a));
}

double closed_form_entropy(long lambda, std::size_t n) {
    const double dn = static_cast<double>(n);
    switch (lambda) {
        case 0:
            return std::numbers::ln2 - 1.0;
        case 1:
            return -dn / (dn + 1.0);
        case 2: {
            // The ((n+3)/(n+1))^{n+2} factor is evaluated through log1p to
            // keep it accurate for large n, where base -> 1 and exponent
            // grows.
            const double num = ((dn - 5.0) * dn - 29.0) * dn - 27.0;
            const double den = (dn + 1.0) * (dn + 2.0) * (dn + 3.0);
            const double pw =
                std::exp((dn + 2.0) * std::log1p(2.0 / (dn + 1.0)));
            return std::log((dn + 3.0) / (3.0 * (dn + 1.0))) - num / den -
                   pw / (dn + 2.0);
        }
        default:
            throw invalid_input(
                "closed_form_entropy: closed forms exist for lambda in "
                "{0, 1, 2} only (got " +
                num_str(lambda) + ")");
    }
}

double asymptotic_constant(double lambda) {
    if (!std::isfinite(lambda) || lambda < 0.0)
        throw invalid_input(
            "asymptotic_constant: lambda must be nonnegative and finite");
    if (lambda == 0.0) return std::numbers::ln2 - 1.0;
    return -1.0 -
           (ln_gamma(2.0 * lambda) - ln_gamma(lambda) - ln_gamma(lambda + 1.0));
}

double explicit_moment(const GegenbauerParams& params, std::size_t n,
                       std::size_t k) {
    if (k == 0) throw invalid_input("explicit_moment: k must be at least 1");
    if (n > 30)
        throw invalid_input(
            "explicit_moment: alternating-sum cancellation grows like 4^n and "
            "is refused beyond n = 30; use column_moments for large n");

    const double lam = effective_lambda(params);
    const bool lam_is_zero = params.integer_lambda && params.lambda_int == 0;

    //   m_{2k,n} = (n+lam)/n! sum_j (-1)^j C(n,j) (2lam+j)_n / (j+lam)
    //              * (-j-lam)_k / (j+lam+1)_k
    //
    // The sum over j is in effect an n-th finite difference of a smooth
    // function of j, so it cancels down by roughly 4^n -- far more than the
    // few digits a log-space assembly can spare.  Every factor here is a
    // short finite product (no gamma functions needed for n <= 30), so each
    // term is built exactly in quad precision and only the final sum is
    // rounded back to double.  The Pochhammer ratio is taken quotient by
    // quotient; each quotient has magnitude below one because lam > -1/2,
    // hence no overflow however deep k goes.  At lambda = 0 the j = 0 term
    // is the limit lambda->0 of [(2lam)_n/lam] * (-lam)_k, which vanishes
    // for every k >= 1, so that j is simply skipped.
    const __float128 ql = lam;
    __float128 sum = 0;
    for (std::size_t j = lam_is_zero ? 1 : 0; j <= n; ++j) {
        const __float128 qj = static_cast<__float128>(j);

        __float128 term = (j % 2 == 0) ? 1 : -1;
        for (std::size_t i = 1; i <= j; ++i)  // C(n,j)
            term *= static_cast<__float128>(n - j + i) / static_cast<int>(i);
        for (std::size_t i = 0; i < n; ++i)  // (2lam+j)_n / n!
            term *= (2 * ql + qj + static_cast<int>(i)) / static_cast<int>(i + 1);
        for (std::size_t i = 0; i < k; ++i)  // (-j-lam)_k / (j+lam+1)_k
            term *= (static_cast<int>(i) - qj - ql) / (qj + ql + 1 + static_cast<int>(i));
        sum += term / (qj + ql);
    }
    return static_cast<double>((static_cast<__float128>(n) + ql) * sum);
}

double tail_moment(const GegenbauerParams& params, std::size_t n,
                   std::size_t k) {
    const double lam = effective_lambda(params);
    if (!(static_cast<double>(k) > static_cast<double>(n) + lam))
        throw invalid_input(
            "tail_moment: valid only beyond the terminating index (needs k > "
            "n + lambda)");
    // sin(pi lambda) vanishes identically at integer lambda: the series has
    // terminated and every tail moment is exactly zero.  Short-circuiting
    // avoids multiplying a huge log-space sum by a rounding-level sine.
    if (params.integer_lambda) return 0.0;

    // Reflection form, every term carrying the same sign:
    //   m_{2k,n} = -sin(pi lam) (n+lam)/(pi n!) sum_j C(n,j) (2lam+j)_n/(j+lam)
    //              * Gamma(j+lam+1)^2 Gamma(k-j-lam) / Gamma(k+j+lam+1)
    SignedLogSum sum;
    const double dk = static_cast<double>(k);
    for (std::size_t j = 0; j <= n; ++j) {
        const double dj = static_cast<double>(j);
        int sign = 1;
        double lg = -ln_gamma(static_cast<double>(n - j) + 1.0) -
                    ln_gamma(dj + 1.0);

        double t = static_cast<double>(n) + lam;
        if (t < 0.0) {
            sign = -sign;
            t = -t;
        }
        lg += std::log(t);

        const SignedLog pn = log_pochhammer_signed(2.0 * lam + dj, n);
        if (pn.sign == 0) continue;
        sign *= pn.sign;
        lg += pn.log_abs;

        double d = dj + lam;
        if (d < 0.0) {
            sign = -sign;
            d = -d;
        }
        lg -= std::log(d);

        lg += 2.0 * ln_gamma(dj + lam + 1.0) + ln_gamma(dk - dj - lam) -
              ln_gamma(dk + dj + lam + 1.0);
        sum.add(lg, sign);
    }
    const double s = sum.value();
    return -std::sin(std::numbers::pi * lam) / std::numbers::pi * s;
}

namespace detail {

double log_truncation_bound(const GegenbauerParams& params, std::size_t n,
                            std::size_t N) {
    require_majorant_domain(params, n, N, "truncation_bound");
    const double lam = params.lambda;
    const double dn = static_cast<double>(n);
    const double dN = static_cast<double>(N);

    std::vector<double> terms;
    terms.reserve(n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
        const double dj = static_cast<double>(j);
        double t = -ln_gamma(dn - dj + 1.0) - ln_gamma(dj + 1.0);
        t += log_pochhammer_signed(2.0 * lam + dj, n).log_abs;
        t -= std::log(dj + lam);
        t += log_pochhammer_signed(-dj - lam + 1.0, static_cast<long>(N) - 1)
                 .log_abs;
        t -= log_pochhammer_signed(dj + lam + 1.0, static_cast<long>(N) - 1)
                 .log_abs;
        terms.push_back(t);
    }
    return std::log(dn) + std::log(dn + lam) - std::log(dN) +
           log_sum_exp(terms);
}

double log_decay_majorant(const GegenbauerParams& params, std::size_t n,
                          std::size_t N) {
    require_majorant_domain(params, n, N, "decay_majorant");
    const double lam = params.lambda;
    const double dn = static_cast<double>(n);
    const double dN = static_cast<double>(N);

    const double prefactor =
        std::log(std::fabs(lam * std::sin(std::numbers::pi * lam))) +
        2.0 * ln_gamma(lam) +
        (dN - lam - 1.0) * (std::log(dN - lam) - std::log(dN + lam)) +
        std::log(dn) + 2.0 * lam - std::log(std::numbers::pi) - std::log(dN);

    std::vector<double> terms;
    terms.reserve(n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
        const double dj = static_cast<double>(j);
        double t = std::log(dn + lam) - std::log(dj + lam);
        t += log_pochhammer_signed(2.0 * lam + dj, n).log_abs;
        t -= ln_gamma(dn - dj + 1.0) + ln_gamma(dj + 1.0);
        t += log_pochhammer_signed(lam, static_cast<long>(j)).log_abs;
        t += log_pochhammer_signed(lam + 1.0, static_cast<long>(j)).log_abs;
        t -= log_pochhammer_signed(dN - lam - dj, static_cast<long>(j)).log_abs;
        t -= log_pochhammer_signed(dN + lam, static_cast<long>(j)).log_abs;
        terms.push_back(t);
    }
    return prefactor + log_sum_exp(terms);
}

}  // namespace detail

double truncation_bound(const GegenbauerParams& params, std::size_t n,
                        std::size_t N) {
    return std::exp(detail::log_truncation_bound(params, n, N));
}

double decay_majorant(const GegenbauerParams& params, std::size_t n,
                      std::size_t N) {
    return std::exp(detail::log_decay_majorant(params, n, N));
}

TruncationPlan choose_truncation(const GegenbauerParams& params, std::size_t n,
                                 double epsilon) {
    if (!(epsilon > 0.0) || !std::isfinite(epsilon))
        throw invalid_input(
            "choose_truncation: epsilon must be positive and finite");

    TruncationPlan plan;
    plan.epsilon = epsilon;

    if (n == 0) {
        // p_0^2 = 1: the entropy is exactly zero, nothing to truncate.
        plan.terminating = true;
        return plan;
    }

    if (params.integer_lambda) {
        plan.N0 = n + static_cast<std::size_t>(params.lambda_int);
        plan.terminating = true;
        return plan;
    }

    if (params.lambda < 0.0) {
        // No computable majorant on (-1/2, 0): certify with the sampled
        // generic bound.  N0 is a general series index here, and the plan is
        // only as trustworthy as the sampled supremum.
        const RecurrenceCoefficients coeffs =
            gegenbauer_coefficients(params, 4 * (n + 1));
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
                "choose_truncation: for lambda in (-1/2, 0) only the sampled "
                "certificate is available, and it reaches " +
                num_str(bound) + " at the cap N = " +
                std::to_string(cap) + ", short of epsilon = " +
                num_str(epsilon));
        plan.N0 = N;
        plan.bound_at_N0 = bound;
        plan.rigorous = false;
        return plan;
    }

    // Non-integer lambda > 0: bisect the rigorous tail bound, bracketing with
    // the closed-form decay majorant.
    const double lam = params.lambda;
    const double leps = std::log(epsilon);
    const std::size_t N1 =
        n + static_cast<std::size_t>(std::floor(lam)) + 1;

    const double lf1 = detail::log_truncation_bound(params, n, N1);
    if (lf1 <= leps) {
        plan.N0 = N1;
        plan.bound_at_N0 = std::exp(lf1);
        return plan;
    }

    // F(N1)/(N1+lam+h)^{2 lam} <= eps  gives the bracket width h.
    const double lF = detail::log_decay_majorant(params, n, N1);
    const double lroot = (lF - leps) / (2.0 * lam);
    if (lroot > std::log(9e15))
        throw numerical_error(
            "choose_truncation: epsilon = " + num_str(epsilon) +
            " needs a truncation beyond 9e15 terms at lambda = " +
            num_str(lam) + "; not attainable");
    double want = std::exp(lroot) - (static_cast<double>(N1) + lam);
    std::size_t h =
        want <= 0.0 ? 0 : static_cast<std::size_t>(std::ceil(want));
    while (detail::log_truncation_bound(params, n, N1 + h) > leps) {
        h = h == 0 ? 1 : 2 * h;
        if (h > static_cast<std::size_t>(4e17))
            throw numerical_error(
                "choose_truncation: bracket search ran away; epsilon = " +
                num_str(epsilon) + " appears unattainable");
    }
    plan.h_used = h;

    std::size_t lo = N1, hi = N1 + h;  // bound(lo) > eps >= bound(hi)
    while (hi - lo > 1) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (detail::log_truncation_bound(params, n, mid) <= leps)
            hi = mid;
        else
            lo = mid;
    }
    plan.N0 = hi;
    plan.bound_at_N0 = std::exp(detail::log_truncation_bound(params, n, hi));
    return plan;
}

EntropyResult entropy_gegenbauer(const GegenbauerParams& params, std::size_t n,
                                 double epsilon) {
    const auto t0 = Clock::now();
    if (!(epsilon > 0.0) || !std::isfinite(epsilon))
        throw invalid_input(
            "entropy_gegenbauer: epsilon must be positive and finite");

    if (n == 0) {
        EntropyResult res;
        res.bound = 0.0;
        res.method = EntropyMethod::GegenbauerTerminating;
        res.seconds = elapsed_seconds(t0);
        return res;
    }

    const TruncationPlan plan = choose_truncation(params, n, epsilon);
    EntropyResult res;
    if (!plan.rigorous) {
        // Sampled certificate with general-index N0: the even-only series
        // needs ceil(N0/2) terms to cover it.
        const std::size_t K = (plan.N0 + 1) / 2;
        const RecurrenceCoefficients coeffs =
            gegenbauer_coefficients(params, n + 1 + K);
        res = entropy_from_series(coeffs, n, K);
        res.truncation_N = plan.N0;
        res.method = EntropyMethod::Generic;
    } else {
        const std::size_t K = plan.N0;
        const RecurrenceCoefficients coeffs =
            gegenbauer_coefficients(params, n + 1 + K);
        res = entropy_from_series(coeffs, n, K);
        res.truncation_N = plan.N0;
        res.method = plan.terminating ? EntropyMethod::GegenbauerTerminating
                                      : EntropyMethod::GegenbauerBounded;
    }
    res.bound = plan.bound_at_N0;
    res.seconds = elapsed_seconds(t0);
    return res;
}

EntropyResult entropy_gegenbauer_at(const GegenbauerParams& params,
                                    std::size_t n, std::size_t N) {
    const auto t0 = Clock::now();
    if (N < 1)
        throw invalid_input("entropy_gegenbauer_at: N must be at least 1");

    if (n == 0) {
        EntropyResult res;
        res.bound = 0.0;
        res.method = EntropyMethod::GegenbauerTerminating;
        res.seconds = elapsed_seconds(t0);
        return res;
    }

    std::size_t K = N;
    EntropyMethod method = EntropyMethod::Generic;
    std::optional<double> bound;
    if (params.integer_lambda) {
        const std::size_t Nterm =
            n + static_cast<std::size_t>(params.lambda_int);
        if (K >= Nterm) {
            K = Nterm;  // everything past the terminating index is zero
            method = EntropyMethod::GegenbauerTerminating;
            bound = 0.0;
        }
    } else if (params.lambda > 0.0 &&
               static_cast<double>(N) + 1.0 >
                   static_cast<double>(n) + params.lambda) {
        bound = std::exp(detail::log_truncation_bound(params, n, N + 1));
        method = EntropyMethod::GegenbauerBounded;
    }

    const RecurrenceCoefficients coeffs =
        gegenbauer_coefficients(params, n + 1 + K);
    EntropyResult res = entropy_from_series(coeffs, n, K);
    res.truncation_N = K;
    res.bound = bound;
    res.method = method;
    res.seconds = elapsed_seconds(t0);
    return res;
}

}  // namespace opq
