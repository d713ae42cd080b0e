#include "opq/recurrence.hpp"
#include "opq/errors.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace opq {

RecurrenceCoefficients::RecurrenceCoefficients(std::vector<double> a,
                                               std::vector<double> b)
    : a_(std::move(a)), b_(std::move(b)) {
    if (a_.empty())
        throw invalid_input("recurrence coefficients: 'a' must not be empty");
    for (std::size_t i = 0; i < a_.size(); ++i) {
        if (!std::isfinite(a_[i]) || a_[i] <= 0.0)
            throw invalid_input("recurrence coefficients: a_" + std::to_string(i + 1) +
                                " = " + num_str(a_[i]) + " (must be finite and > 0)");
    }
    if (b_.empty()) {
        b_.assign(a_.size(), 0.0);
    } else if (b_.size() != a_.size()) {
        throw invalid_input("recurrence coefficients: 'b' has " + std::to_string(b_.size()) +
                            " entries but 'a' has " + std::to_string(a_.size()) +
                            " (must match, or omit 'b' for a symmetric measure)");
    }
    symmetric_ = true;
    for (std::size_t i = 0; i < b_.size(); ++i) {
        if (!std::isfinite(b_[i]))
            throw invalid_input("recurrence coefficients: b_" + std::to_string(i) +
                                " is not finite");
        if (b_[i] != 0.0) symmetric_ = false;
    }
}

JacobiPrincipalMinor minor(const RecurrenceCoefficients& coeffs, std::size_t n) {
    if (n < 1)
        throw invalid_input("minor: order must be >= 1");
    if (coeffs.size() < n)
        throw invalid_input("minor: order " + std::to_string(n) + " needs coefficients through b_" +
                            std::to_string(n - 1) + ", only " + std::to_string(coeffs.size()) +
                            " available");
    JacobiPrincipalMinor J;
    J.n = n;
    J.diag.assign(coeffs.b_all().begin(), coeffs.b_all().begin() + n);
    J.offdiag.assign(coeffs.a_all().begin(), coeffs.a_all().begin() + (n - 1));
    return J;
}

double log_leading_term(const RecurrenceCoefficients& coeffs, std::size_t n) {
    if (coeffs.size() < n)
        throw invalid_input("log_leading_term: n = " + std::to_string(n) + " exceeds the " +
                            std::to_string(coeffs.size()) + " available coefficients");
    double sum = 0.0;
    for (std::size_t j = 1; j <= n; ++j)
        sum += 2.0 * std::log(2.0 * coeffs.a(j));
    return sum;
}

PolynomialEvaluation evaluate_polynomials(const RecurrenceCoefficients& coeffs,
                                          std::size_t n, double x) {
    if (n > 0 && coeffs.size() < n)
        throw invalid_input("evaluate_polynomials: degree " + std::to_string(n) +
                            " needs coefficients through a_" + std::to_string(n) + ", only " +
                            std::to_string(coeffs.size()) + " available");
    PolynomialEvaluation ev;
    ev.x = x;
    ev.extrapolated = std::fabs(x) > 1.0;
    ev.values.resize(n + 1);
    ev.values[0] = 1.0;
    double prev = 0.0, cur = 1.0;  // p_{-1}, p_0
    for (std::size_t k = 0; k < n; ++k) {
        const double ak = (k >= 1) ? coeffs.a(k) : 0.0;
        const double next = ((x - coeffs.b(k)) * cur - ak * prev) / coeffs.a(k + 1);
        prev = cur;
        cur = next;
        ev.values[k + 1] = cur;
    }
    return ev;
}

}  // namespace opq
