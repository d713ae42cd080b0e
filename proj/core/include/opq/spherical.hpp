#pragma once

// Angular entropy S_{l,m} = -int |Y_{l,m}|^2 ln |Y_{l,m}|^2 dOmega of the
// spherical harmonics, computed by reducing the polar integral to the
// ultraspherical entropy at lambda = |m| + 1/2, degree l - |m|:
//
//   S_{l,m} = ln(2 pi / c_lambda) + E_{l-|m|}^{lambda}
//             - |m| [2 psi(l+|m|+1) - 2 psi(l+1/2) - 2 ln 2 - 1/(l+1/2)]
//
// S depends on m only through |m|.

#include <vector>

#include "opq/gegenbauer.hpp"

namespace opq {

struct QuantumNumbers {
    long l = 0;
    long m = 0;

    QuantumNumbers(long l_, long m_);  // validates l >= 0 and |m| <= l
};

double spherical_entropy(const QuantumNumbers& q);

struct SphericalProfilePoint {
    long m = 0;
    double S = 0.0;
};

// S_{l,m} for m in [m_lo, m_hi] (within [-l, l]); each |m| is computed once
// and mirrored, so S_{l,m} and S_{l,-m} are bit-identical.
std::vector<SphericalProfilePoint> spherical_entropy_profile(long l, long m_lo,
                                                             long m_hi);

// Full profile m = -l..l.
std::vector<SphericalProfilePoint> spherical_entropy_profile(long l);

}  // namespace opq
