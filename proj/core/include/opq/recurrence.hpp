#ifndef OPQ_RECURRENCE_HPP
#define OPQ_RECURRENCE_HPP

#include <cstddef>
#include <vector>

namespace opq {

// Three-term recurrence coefficients of a family of polynomials orthonormal
// with respect to a unit Borel measure on [-1,1]:
//
//     x p_k(x) = a_{k+1} p_{k+1}(x) + b_k p_k(x) + a_k p_{k-1}(x),
//     p_{-1} = 0,  p_0 = 1.
//
// Indexing follows the classical convention: a is indexed from 1, b from 0.
// Storage holds a_1..a_m and b_0..b_{m-1}; an absent b means b == 0
// (symmetric measure).  Immutable after construction, safe to share.
class RecurrenceCoefficients {
public:
    // Throws invalid_input if any a_k <= 0 or non-finite (message names the
    // offending index), if any b_k is non-finite, or if b is present with a
    // length different from a's.
    explicit RecurrenceCoefficients(std::vector<double> a,
                                    std::vector<double> b = {});

    std::size_t size() const { return a_.size(); }   // m
    double a(std::size_t k) const { return a_[k - 1]; }  // a_k, 1 <= k <= m
    double b(std::size_t k) const { return b_[k]; }      // b_k, 0 <= k < m
    bool symmetric() const { return symmetric_; }        // every b_k == 0

    const std::vector<double>& a_all() const { return a_; }
    const std::vector<double>& b_all() const { return b_; }

private:
    std::vector<double> a_;
    std::vector<double> b_;
    bool symmetric_;
};

// Leading r-by-r section of the Jacobi matrix: diag carries b_0..b_{r-1},
// offdiag carries a_1..a_{r-1}.  Symmetric tridiagonal; never materialized
// as a dense matrix.
struct JacobiPrincipalMinor {
    std::size_t n;               // order
    std::vector<double> diag;    // n entries
    std::vector<double> offdiag; // n-1 entries
};

// Values p_0(x)..p_n(x) of the orthonormal polynomials at one point.
struct PolynomialEvaluation {
    double x;
    std::vector<double> values;  // n+1 entries
    bool extrapolated;           // true when |x| > 1
};

// The order-n leading principal section of the Jacobi matrix.
// Requires n >= 1 and coefficients through b_{n-1}, a_{n-1}.
JacobiPrincipalMinor minor(const RecurrenceCoefficients& coeffs, std::size_t n);

// 2 * sum_{j=1}^{n} ln(2 a_j), accumulated term by term (no product is
// formed, so no overflow for large n).  This is the additive constant of the
// entropy series: with gamma_n = (a_1...a_n)^{-1} the leading coefficient of
// p_n, the value equals -2 ln(gamma_n / 2^n).  n = 0 gives 0.
double log_leading_term(const RecurrenceCoefficients& coeffs, std::size_t n);

// Forward recurrence evaluation of p_0..p_n at x.  Any real x is accepted;
// |x| > 1 is flagged as extrapolation in the result.
PolynomialEvaluation evaluate_polynomials(const RecurrenceCoefficients& coeffs,
                                          std::size_t n, double x);

}  // namespace opq

#endif
