#pragma once

// Quadrature-based reference computations: Gauss rules synthesized from
// recurrence coefficients, plus two brute-force entropy evaluations that are
// independent of the Chebyshev-moment series and serve as cross-checks.

#include <cstddef>
#include <vector>

#include "opq/recurrence.hpp"

namespace opq {

// Gauss rule for the (unit-mass) measure behind a recurrence.  Nodes are the
// eigenvalues of the order-r Jacobi principal minor, ascending; weights are
// positive and sum to one.
struct QuadratureRule {
    std::size_t order = 0;
    std::vector<double> nodes;
    std::vector<double> weights;
};

// Eigenvalues of a symmetric tridiagonal matrix (implicit-shift QL,
// eigenvalues only), returned ascending.  offdiag.size() must be
// diag.size() - 1.  Deterministic: identical inputs give bit-identical
// output.  Throws numerical_error with iteration diagnostics if an
// eigenvalue fails to converge.
std::vector<double> tridiagonal_eigenvalues(std::vector<double> diag,
                                            std::vector<double> offdiag);

// r-point Gauss rule; needs at least r coefficient rows.
QuadratureRule gauss_rule(const RecurrenceCoefficients& coeffs, std::size_t r);

// -int p_n^2 ln(p_n^2) dmu by a K-point Gauss rule, K >= n + 1.  Nodes where
// p_n^2 < 1e-300 contribute zero (the x ln x limit).
double quadrature_entropy(const RecurrenceCoefficients& coeffs, std::size_t n,
                          std::size_t K);

// Entropy through the zero/potential identity: the log-leading term,
// -2n ln 2, and twice the logarithmic potential of p_n^2 dmu summed over the
// zeros of p_n.  K >= 2n quadrature points; node/zero collisions closer than
// 1e-14 are skipped, and the skip count is reported through `skipped` when a
// pointer is given.
double zero_potential_entropy(const RecurrenceCoefficients& coeffs,
                              std::size_t n, std::size_t K,
                              std::size_t* skipped = nullptr);

}  // namespace opq
