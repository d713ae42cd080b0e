#ifndef OPQ_MOMENTS_HPP
#define OPQ_MOMENTS_HPP

#include "opq/recurrence.hpp"

#include <cstddef>
#include <vector>

namespace opq {

// Which measure a moment sequence integrates the Chebyshev polynomials
// against: the uniform measure on the n zeros of p_n, or the probability
// density p_n^2 dmu.
enum class MomentKind { ZeroCounting, SquaredPolynomial };

// Chebyshev moments values[k] = integral of T_k, k = 0..N, for one fixed
// polynomial degree n.  Both underlying measures are unit measures, so
// values[0] = 1 and |values[k]| <= 1 up to rounding.  The bound is monitored,
// not enforced: first_bound_violation reports the first entry exceeding
// 1 + tol so callers can surface a diagnostic instead of clamping.
struct ChebyshevMomentSequence {
    MomentKind kind;
    std::size_t n;               // polynomial degree
    std::size_t N;               // highest Chebyshev index computed
    std::vector<double> values;  // N+1 entries

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t first_bound_violation(double tol = 1e-12) const;
};

// Moments of the zero-counting measure: values[k] = (1/n) tr T_k(J_n),
// computed by n batched vector recurrences u_k = 2 J_n u_{k-1} - u_{k-2}
// started at the basis vectors, with compensated trace accumulation.
// Requires N >= 1.
ChebyshevMomentSequence trace_moments(const JacobiPrincipalMinor& minor,
                                      std::size_t N);

// Moments of p_n^2 dmu: values[k] = e_n^T T_k(J_r) e_n (0-based entry n)
// with r = n + 1 + floor(N/2), which makes every entry the exact integral --
// powers of the Jacobi matrix below that order agree with the full operator.
// Requires N >= 1 and coefficients through index r.
ChebyshevMomentSequence column_moments(const RecurrenceCoefficients& coeffs,
                                       std::size_t n, std::size_t N);

// Even-only fast paths for symmetric measures (all b_k = 0): odd moments
// vanish by parity, so the recurrence runs in T_2(J) = 2J^2 - I and covers
// Chebyshev orders 2k, k = 0..K, at half the steps.  The returned sequence
// spans N = 2K with the odd slots exactly 0.0.  A nonzero diagonal is
// rejected with instructions to use the general path.
ChebyshevMomentSequence even_trace_moments(const JacobiPrincipalMinor& minor,
                                           std::size_t K);
ChebyshevMomentSequence even_column_moments(const RecurrenceCoefficients& coeffs,
                                            std::size_t n, std::size_t K);

namespace detail {
// column_moments with the evaluation order r overridden; exists so tests can
// verify that enlarging r does not move the computed moments.
ChebyshevMomentSequence column_moments_with_order(const RecurrenceCoefficients& coeffs,
                                                  std::size_t n, std::size_t N,
                                                  std::size_t r);
}  // namespace detail

}  // namespace opq

#endif
