#ifndef OPQ_BANDED_HPP
#define OPQ_BANDED_HPP

#include <cstddef>
#include <vector>

namespace opq {

// Low-level banded kernels behind the moment recurrences.  Everything here
// works on raw band arrays so the batched loops in the moment code stay free
// of per-element indirection.
//
// The workhorse identity is the Chebyshev three-term step
//     T_{k+1}(A) x = 2 A (T_k(A) x) - T_{k-1}(A) x,
// fused so the previous iterate is overwritten in place:
//     prev := 2*(A*cur) - prev.

// y = J x for symmetric tridiagonal J (diag d[0..n), offdiag e[0..n-1)).
void apply_tridiagonal(const double* d, const double* e, std::size_t n,
                       const double* x, double* y);

// prev := 2*(J*cur) - prev, same J.  cur and prev must not alias.
void cheb_step_tridiagonal(const double* d, const double* e, std::size_t n,
                           const double* cur, double* prev);

// Bands of 2 J^2 - I for J symmetric tridiagonal with zero diagonal.  The
// square of such a J couples only entries two apart, so the operator is
// pentadiagonal with an identically zero first off-band: a diagonal plus one
// distance-2 band suffice.
struct EvenSquaredBands {
    std::vector<double> diag;  // r entries
    std::vector<double> off2;  // r-2 entries (empty for r < 3)
};

// Build the bands from offdiag a_1..a_{r-1} (passed 0-based, length r-1).
EvenSquaredBands even_squared_bands(const std::vector<double>& offdiag,
                                    std::size_t r);

// y = B x for the distance-2 banded operator above.
void apply_even(const EvenSquaredBands& B, const double* x, double* y);

// prev := 2*(B*cur) - prev.  cur and prev must not alias.
void cheb_step_even(const EvenSquaredBands& B, const double* cur, double* prev);

}  // namespace opq

#endif
