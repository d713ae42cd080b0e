#include "opq/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "opq/errors.hpp"

namespace opq {

namespace {

constexpr int kMaxQLSweeps = 64;

}  // namespace

std::vector<double> tridiagonal_eigenvalues(std::vector<double> d,
                                            std::vector<double> e) {
    const std::size_t n = d.size();
    if (n == 0)
        throw invalid_input("tridiagonal_eigenvalues: matrix is empty");
    if (e.size() + 1 != n)
        throw invalid_input(
            "tridiagonal_eigenvalues: offdiag must have diag.size()-1 entries");
    if (n == 1) return d;

    e.push_back(0.0);  // sentinel so e[l] is always addressable
    const double eps = std::numeric_limits<double>::epsilon();

    for (std::size_t l = 0; l < n; ++l) {
        int iter = 0;
        std::size_t m;
        do {
            // Look for a negligible off-diagonal element; the block [l, m]
            // is what the QL sweep acts on.
            for (m = l; m + 1 < n; ++m) {
                const double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
                if (std::fabs(e[m]) <= eps * dd) break;
            }
            if (m == l) break;

            if (++iter > kMaxQLSweeps)
                throw numerical_error(
                    "tridiagonal_eigenvalues: QL iteration for eigenvalue " +
                    std::to_string(l) + " of " + std::to_string(n) +
                    " did not converge within " + std::to_string(kMaxQLSweeps) +
                    " sweeps");

            // Wilkinson shift from the leading 2x2, then one implicit QL
            // sweep of Givens rotations chasing the bulge from m down to l.
            double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            double r = std::hypot(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
            double s = 1.0, c = 1.0, p = 0.0;
            bool underflow = false;
            for (std::size_t i = m; i-- > l;) {
                double f = s * e[i];
                const double b = c * e[i];
                r = std::hypot(f, g);
                e[i + 1] = r;
                if (r == 0.0) {
                    // Rotation annihilated prematurely: recover and rescan.
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if (underflow) continue;
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        } while (m != l);
    }

    std::sort(d.begin(), d.end());
    return d;
}

QuadratureRule gauss_rule(const RecurrenceCoefficients& coeffs, std::size_t r) {
    if (r == 0) throw invalid_input("gauss_rule: order must be at least 1");
    if (coeffs.size() < r)
        throw invalid_input("gauss_rule: order " + std::to_string(r) +
                            " needs " + std::to_string(r) +
                            " coefficient rows, have " +
                            std::to_string(coeffs.size()));

    const JacobiPrincipalMinor J = minor(coeffs, r);
    QuadratureRule rule;
    rule.order = r;
    rule.nodes = tridiagonal_eigenvalues(J.diag, J.offdiag);
    rule.weights.resize(r);
    for (std::size_t i = 0; i < r; ++i) {
        // Classical Gauss weight: 1 / sum_{k<r} p_k(node)^2.  Positive by
        // construction (the k = 0 term alone is 1).
        const PolynomialEvaluation ev =
            evaluate_polynomials(coeffs, r - 1, rule.nodes[i]);
        double s = 0.0;
        for (double v : ev.values) s += v * v;
        rule.weights[i] = 1.0 / s;
    }
    return rule;
}

double quadrature_entropy(const RecurrenceCoefficients& coeffs, std::size_t n,
                          std::size_t K) {
    if (K < n + 1)
        throw invalid_input("quadrature_entropy: need K >= n + 1 (got K = " +
                            std::to_string(K) + ", n = " + std::to_string(n) +
                            ")");
    const QuadratureRule rule = gauss_rule(coeffs, K);
    double acc = 0.0;
    for (std::size_t i = 0; i < K; ++i) {
        const PolynomialEvaluation ev =
            evaluate_polynomials(coeffs, n, rule.nodes[i]);
        const double p2 = ev.values[n] * ev.values[n];
        if (p2 > 1e-300) acc -= rule.weights[i] * p2 * std::log(p2);
    }
    return acc;
}

double zero_potential_entropy(const RecurrenceCoefficients& coeffs,
                              std::size_t n, std::size_t K,
                              std::size_t* skipped) {
    if (n == 0)
        throw invalid_input("zero_potential_entropy: n must be at least 1");
    if (K < 2 * n)
        throw invalid_input("zero_potential_entropy: need K >= 2n (got K = " +
                            std::to_string(K) + ", n = " + std::to_string(n) +
                            ")");

    const std::vector<double> zeros = gauss_rule(coeffs, n).nodes;
    const QuadratureRule rule = gauss_rule(coeffs, K);

    std::vector<double> pn2(K);
    for (std::size_t i = 0; i < K; ++i) {
        const double v = evaluate_polynomials(coeffs, n, rule.nodes[i]).values[n];
        pn2[i] = v * v;
    }

    std::size_t nskip = 0;
    double potential = 0.0;  // sum over zeros of V(zeta)
    for (double zeta : zeros) {
        double V = 0.0;
        for (std::size_t i = 0; i < K; ++i) {
            const double dx = std::fabs(zeta - rule.nodes[i]);
            if (dx < 1e-14) {
                ++nskip;
                continue;
            }
            V -= rule.weights[i] * pn2[i] * std::log(dx);
        }
        potential += V;
    }
    if (skipped) *skipped = nskip;

    return log_leading_term(coeffs, n) -
           2.0 * static_cast<double>(n) * std::numbers::ln2 + 2.0 * potential;
}

}  // namespace opq
