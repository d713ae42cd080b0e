#ifndef OPQ_SPECFUN_HPP
#define OPQ_SPECFUN_HPP

namespace opq {

// Magnitude/sign decomposition x = sign * exp(log_abs).  Used wherever a
// product of Gamma ratios would overflow double long before the final
// quantity does.
struct SignedLog {
    double log_abs;  // ln|x|; -infinity when x == 0
    int sign;        // -1, 0 or +1

    double value() const;  // sign * exp(log_abs)
};

// ln Gamma(x) for x > 0.  Relative accuracy ~1e-14 over [0.1, 1e6]
// (asymptotic series after shifting the argument above 10).
double ln_gamma(double x);

// psi(x) = Gamma'(x)/Gamma(x) for x > 0, same accuracy envelope.
double digamma(double x);

// ln|Gamma(x)| and the sign of Gamma(x); x may be negative non-integer
// (reflection formula).  Throws invalid_input at the poles x = 0, -1, -2, ...
SignedLog log_gamma_signed(double x);

// Pochhammer symbol (a)_k = a(a+1)...(a+k-1) as a SignedLog, k >= 0.
// Negative non-integer a gets its sign from the exact count of negative
// factors, min(k, ceil(-a)); a nonpositive-integer a with k > -a yields
// sign 0 (the product hits zero).
SignedLog log_pochhammer_signed(double a, long k);

}  // namespace opq

#endif
