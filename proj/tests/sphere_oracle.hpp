#pragma once

// Brute-force reference for the spherical-harmonic entropy, independent of
// the ultraspherical reduction: associated Legendre functions by their own
// recurrences, normalized directly, integrated with a Gauss-Legendre rule.
//
//   |Y_lm|^2 = N_lm^2 P_l^m(u)^2,  N_lm^2 = (2l+1)(l-m)!/(4 pi (l+m)!)
//   S = -int |Y|^2 ln |Y|^2 dOmega = -4 pi int |Y|^2 ln |Y|^2 du/2
//
// (the azimuthal factor integrates out; the polar integral is taken against
// the unit measure du/2, which is what a lambda = 1/2 Gauss rule delivers).

#include <cmath>
#include <cstddef>

#include "opq/gegenbauer.hpp"
#include "opq/oracle.hpp"
#include "opq/specfun.hpp"

inline opq::QuadratureRule sphere_oracle_rule(std::size_t points) {
    const opq::GegenbauerParams legendre(0.5);
    return opq::gauss_rule(opq::gegenbauer_coefficients(legendre, points),
                           points);
}

// P_l^m(u) for m >= 0 by the standard ladder: seed P_m^m, one step to
// P_{m+1}^m, then the three-term recurrence upward in l.
inline double sphere_oracle_assoc_legendre(long l, long m, double u) {
    double pmm = 1.0;
    if (m > 0) {
        const double s2 = (1.0 - u) * (1.0 + u);
        double odd = 1.0;
        for (long i = 1; i <= m; ++i) {
            pmm *= -odd * std::sqrt(s2);
            odd += 2.0;
        }
    }
    if (l == m) return pmm;
    double pm1 = u * (2.0 * m + 1.0) * pmm;
    if (l == m + 1) return pm1;
    double p = 0.0;
    for (long ll = m + 2; ll <= l; ++ll) {
        p = (u * (2.0 * ll - 1.0) * pm1 - (ll + m - 1.0) * pmm) / (ll - m);
        pmm = pm1;
        pm1 = p;
    }
    return p;
}

inline double sphere_oracle_entropy(long l, long m,
                                    const opq::QuadratureRule& rule) {
    if (m < 0) m = -m;
    const double ln_norm2 = std::log((2.0 * l + 1.0) / (4.0 * std::acos(-1.0))) +
                            opq::ln_gamma(static_cast<double>(l - m + 1)) -
                            opq::ln_gamma(static_cast<double>(l + m + 1));
    const double norm2 = std::exp(ln_norm2);
    double acc = 0.0;
    for (std::size_t j = 0; j < rule.order; ++j) {
        const double P = sphere_oracle_assoc_legendre(l, m, rule.nodes[j]);
        const double g = norm2 * P * P;
        if (g > 1e-300) acc += rule.weights[j] * g * std::log(g);
    }
    return -4.0 * std::acos(-1.0) * acc;
}
