#pragma once

// Entropy of p_n^2 dmu assembled from Chebyshev moments:
//
//     E_n = -int p_n^2 ln(p_n^2) dmu
//         = log-leading term + 4n * sum_{k>=1} c_k m_k / k
//
// where c_k are the zero-counting moments tr T_k(J_n)/n and m_k the
// squared-polynomial moments <e_n, T_k(J_r) e_n>.  For measures that are
// symmetric about the origin every odd term vanishes and the sum regroups to
// 2n * sum_{k>=1} c_{2k} m_{2k} / k; truncation indices below follow that
// convention (N even-series terms, Chebyshev degree 2N) whenever the input
// coefficients are symmetric, and plain degree-N truncation otherwise.

#include <cstddef>
#include <optional>
#include <string>

#include "opq/moments.hpp"
#include "opq/recurrence.hpp"

namespace opq {

enum class EntropyMethod {
    Generic,                // moment series, no rigorous tail control
    GegenbauerTerminating,  // ultraspherical series that stops exactly
    GegenbauerBounded,      // ultraspherical series with a certified tail bound
};

// Stable spelling used in CLI/JSON output.
const char* method_name(EntropyMethod method);

struct EntropyResult {
    std::size_t n = 0;
    double value = 0.0;           // nats
    std::size_t truncation_N = 0; // see the header comment for index semantics
    std::optional<double> bound;  // certified remainder bound, when one exists
    EntropyMethod method = EntropyMethod::Generic;
    double seconds = 0.0;         // wall time spent producing this result
};

// Sampled estimate of M_n = sup_x int |(p_n^2(x) - p_n^2(t)) / (x - t)| dmu(t)
// and the resulting tail bound 4 M_n / (N + 1).  The supremum is scanned on a
// finite Chebyshev-spaced grid, so the certificate is an estimate, not a
// proof; `quality` says as much.
struct RemainderCertificate {
    double M_n_estimate = 0.0;
    std::size_t N = 0;
    double bound = 0.0;
    std::string quality = "sampled -- not rigorous";
};

// ln 2 + 2 sum_{k=1}^{N} c_k m_k / k, the mutual-energy functional the
// entropy reduces to.  Both sequences must describe the same n and hold
// moments at least through degree N; c must be zero-counting moments and m
// squared-polynomial moments.
double mutual_energy(const ChebyshevMomentSequence& c,
                     const ChebyshevMomentSequence& m, std::size_t N);

// Entropy from the truncated series, n >= 1, N >= 1.  Symmetric coefficients
// take the even-only path (N even-series terms); the result's bound is empty
// and the method tag Generic -- callers with tail certificates fill those in.
EntropyResult entropy_from_series(const RecurrenceCoefficients& coeffs,
                                  std::size_t n, std::size_t N);

// Sampled M_n certificate.  grid_size = 0 picks the default 4n + 64 scan
// points; explicit values must be at least 2.  The difference quotient
// switches to the derivative 2 p_n p_n' inside |x - t| < 1e-8.
RemainderCertificate generic_remainder_bound(const RecurrenceCoefficients& coeffs,
                                             std::size_t n, std::size_t N,
                                             std::size_t grid_size = 0);

// Entropy with a sampled tail certificate <= epsilon: the general-index
// truncation doubles from 2(n+1) until the certificate passes, capped at
// 64(n+1) (numerical_error beyond).  The reported truncation_N is the
// general-index N backing the certificate even on the symmetric path.
EntropyResult entropy_to_tolerance(const RecurrenceCoefficients& coeffs,
                                   std::size_t n, double epsilon);

}  // namespace opq
