#pragma once

// Closed-form normalization constants: Hausdorff sphere areas, ball volumes,
// the total Grassmannian measure beta(d,k), and the flag-measure
// normalizations gamma~(d,k) and gamma(d,k).

#include <cmath>
#include <stdexcept>

#include "combinatorics.hpp"

namespace flagmv {

inline constexpr double kPi = 3.141592653589793238462643383279502884;

// H^m(S^m) = 2 pi^{(m+1)/2} / Gamma((m+1)/2).
inline double sphere_area(int m) {
    if (m < 0) throw std::invalid_argument("sphere_area: m >= 0 required");
    return 2.0 * std::pow(kPi, 0.5 * (m + 1)) / std::tgamma(0.5 * (m + 1));
}

// kappa_j = H^j(B^j) = pi^{j/2} / Gamma(j/2 + 1).
inline double ball_volume(int j) {
    if (j < 0) throw std::invalid_argument("ball_volume: j >= 0 required");
    return std::pow(kPi, 0.5 * j) / std::tgamma(0.5 * j + 1.0);
}

// beta(d,k) = Gamma(1/2)^{k(d-k)} prod_{j=1}^k Gamma(j/2) / Gamma((d-j+1)/2):
// the total Hausdorff measure of G(d,k).
inline double beta_const(int d, int k) {
    if (k < 0 || k > d) throw std::invalid_argument("beta_const: 0 <= k <= d");
    double r = std::pow(std::tgamma(0.5), double(k) * double(d - k));
    for (int j = 1; j <= k; ++j)
        r *= std::tgamma(0.5 * j) / std::tgamma(0.5 * (d - j + 1));
    return r;
}

struct GammaPair {
    double gamma_tilde; // normalizes the extended flag measure
    double gamma;       // normalizes the curvature representation
};

// gamma~(d,k) = (1/2) C(d-1,k) Gamma((d-k)/2) Gamma((k+1)/2) /
//               (Gamma(1/2) Gamma(d/2)),
// gamma(d,k)  = C(d-1,k) / H^{k*}(S^{k*}),  k* = d-1-k,
// with the cross-check gamma = gamma~ * beta(d-1,k*) / beta(d,k*).
inline GammaPair gamma_consts(int d, int k) {
    if (k < 0 || k > d - 1) throw std::invalid_argument("gamma_consts: 0 <= k <= d-1");
    const int ks = d - 1 - k;
    GammaPair g;
    g.gamma_tilde = 0.5 * binom(d - 1, k) * std::tgamma(0.5 * (d - k)) *
                    std::tgamma(0.5 * (k + 1)) /
                    (std::tgamma(0.5) * std::tgamma(0.5 * d));
    g.gamma = binom(d - 1, k) / sphere_area(ks);
    double alt = g.gamma_tilde * beta_const(d - 1, ks) / beta_const(d, ks);
    if (std::abs(alt - g.gamma) > 1e-10 * std::max(1.0, std::abs(g.gamma)))
        throw std::runtime_error("gamma_consts: internal consistency check failed");
    return g;
}

} // namespace flagmv
