#pragma once

// Ultraspherical (Gegenbauer) specialization: recurrence coefficients for the
// weight c_lambda (1 - x^2)^{lambda - 1/2} on [-1, 1], closed forms, explicit
// squared-polynomial moments, and a rigorous truncation machinery built on a
// computable tail majorant.  Every truncation index in this module refers to
// the even-only series (the weight is symmetric, so odd terms vanish).

#include <cstddef>

#include "opq/entropy.hpp"
#include "opq/recurrence.hpp"

namespace opq {

struct GegenbauerParams {
    double lambda = 0.0;
    double c_lambda = 0.0;       // Gamma(lambda+1) / (sqrt(pi) Gamma(lambda+1/2))
    bool integer_lambda = false; // within 1e-12 of a nonnegative integer
    long lambda_int = 0;         // that integer when integer_lambda is set

    // Throws invalid_input unless lambda > -1/2 and finite.
    explicit GegenbauerParams(double lam);
};

struct TruncationPlan {
    std::size_t N0 = 0;       // chosen even-series truncation (general-index
                              // when rigorous is false -- see choose_truncation)
    double epsilon = 0.0;
    double bound_at_N0 = 0.0; // tail bound at N0; exactly 0 when terminating
    std::size_t h_used = 0;   // bracket width handed to the bisection
    bool terminating = false;
    bool rigorous = true;     // false when only the sampled generic
                              // certificate backs the bound
};

// First m recurrence coefficients a_1..a_m (b is identically zero).
RecurrenceCoefficients gegenbauer_coefficients(const GegenbauerParams& params,
                                               std::size_t m);

// Exact entropies for lambda in {0, 1, 2}; anything else throws.
double closed_form_entropy(long lambda, std::size_t n);

// Large-n limit of the entropy: -1 - ln(Gamma(2 lambda) /
// (Gamma(lambda) Gamma(lambda+1))), with the lambda = 0 limit ln 2 - 1.
double asymptotic_constant(double lambda);

// m_{2k,n} from the alternating hypergeometric-style sum.  The terms grow
// combinatorially, so n > 30 is refused (use column_moments there); k >= 1.
double explicit_moment(const GegenbauerParams& params, std::size_t n,
                       std::size_t k);

// m_{2k,n} for k beyond the terminating index n + lambda, through the
// reflection form whose terms all share one sign -- no cancellation, valid
// for any n.  Integer lambda returns exactly 0 (the series has terminated).
double tail_moment(const GegenbauerParams& params, std::size_t n,
                   std::size_t k);

// Rigorous bound on the absolute entropy tail past even-series index N
// (i.e. on |E - E_truncated-at-(N-1)|).  Requires non-integer lambda > 0 and
// N > n + lambda; lambda in (-1/2, 0] has no usable majorant and throws --
// fall back to generic_remainder_bound there.
double truncation_bound(const GegenbauerParams& params, std::size_t n,
                        std::size_t N);

// Closed-form envelope F(N) with truncation_bound(N + h) <=
// F(N) / (N + lambda + h)^{2 lambda}, used to bracket truncation searches.
// Same domain as truncation_bound.
double decay_majorant(const GegenbauerParams& params, std::size_t n,
                      std::size_t N);

// Smallest even-series truncation whose tail bound passes epsilon.
//   - integer lambda: the series terminates at N0 = n + lambda (bound 0);
//   - lambda > 0 non-integer: bisection on truncation_bound, bracketed by
//     decay_majorant (rigorous);
//   - lambda in (-1/2, 0): falls back to the sampled generic certificate;
//     the returned N0 is then a GENERAL series index (rigorous = false).
TruncationPlan choose_truncation(const GegenbauerParams& params, std::size_t n,
                                 double epsilon);

// Entropy E_n for the ultraspherical weight to tolerance epsilon, following
// the plan choose_truncation picks.  n = 0 returns 0 exactly.
EntropyResult entropy_gegenbauer(const GegenbauerParams& params, std::size_t n,
                                 double epsilon);

// Entropy at a caller-chosen even-series truncation N >= 1.  Integer lambda
// caps the sum at its terminating index; non-integer lambda > 0 attaches the
// tail bound at N + 1 whenever that index is admissible.
EntropyResult entropy_gegenbauer_at(const GegenbauerParams& params,
                                    std::size_t n, std::size_t N);

namespace detail {

// log-space versions used by the truncation search (the plain values can
// overflow double for large lambda).
double log_truncation_bound(const GegenbauerParams& params, std::size_t n,
                            std::size_t N);
double log_decay_majorant(const GegenbauerParams& params, std::size_t n,
                          std::size_t N);

}  // namespace detail

}  // namespace opq
