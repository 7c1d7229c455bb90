#pragma once

// The angular weight F_{k,l} of the translative mixed-volume representation
// and its cutoff F_{k,l}^(eps). For k + l = d and theta in [0,pi),
//
//   F_{k,l}(theta) = theta * I(theta) / (H^{d-1}(S^{d-1}) sin^{d-1} theta),
//   I(theta) = int_0^1 sin^{k*}(t theta) sin^{l*}((1-t) theta) dt,
//
// with k* = d-1-k, l* = d-1-l. At theta = 0 every sine ratio is taken to be 1,
// so F(0) = 1 / H^{d-1}(S^{d-1}); the value at theta = pi is fixed to 0 (the
// wedge factor it multiplies vanishes there).

#include <cmath>
#include <stdexcept>

#include "constants.hpp"

namespace flagmv {

namespace detail {

inline double ipow(double x, int n) {
    double r = 1.0;
    for (int i = 0; i < n; ++i) r *= x;
    return r;
}

// Adaptive Simpson quadrature on [a,b] to absolute tolerance `tol`.
template <typename F>
double adaptive_simpson_rec(const F& f, double a, double b, double fa, double fm,
                            double fb, double whole, double tol, int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    double h = b - a;
    double left = (h / 12.0) * (fa + 4.0 * flm + fm);
    double right = (h / 12.0) * (fm + 4.0 * frm + fb);
    double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return adaptive_simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

template <typename F>
double adaptive_simpson(const F& f, double a, double b, double tol) {
    double m = 0.5 * (a + b);
    double fa = f(a), fm = f(m), fb = f(b);
    double whole = ((b - a) / 6.0) * (fa + 4.0 * fm + fb);
    return adaptive_simpson_rec(f, a, b, fa, fm, fb, whole, tol, 48);
}

} // namespace detail

inline double f_kl(double theta, int k, int l, double quad_tol = 1e-12) {
    const int d = k + l;
    if (k < 1 || l < 1)
        throw std::invalid_argument("f_kl: k,l >= 1 required");
    if (theta < 0.0 || theta > kPi)
        throw std::invalid_argument("f_kl: theta in [0,pi] required");
    const double area = sphere_area(d - 1);
    if (theta == 0.0) return 1.0 / area;
    if (theta >= kPi) return 0.0;
    const int ks = d - 1 - k, ls = d - 1 - l;
    auto integrand = [&](double t) {
        return detail::ipow(std::sin(t * theta), ks) * detail::ipow(std::sin((1.0 - t) * theta), ls);
    };
    double I = detail::adaptive_simpson(integrand, 0.0, 1.0, quad_tol);
    double s = std::sin(theta);
    return theta * I / (area * detail::ipow(s, d - 1));
}

inline double f_kl_eps(double theta, double eps, int k, int l, double quad_tol = 1e-12) {
    if (theta > kPi - eps) return 0.0;
    return f_kl(theta, k, l, quad_tol);
}

// Closed form for d = 4, k = l = 2, via
// int_0^1 sin(t th) sin((1-t) th) dt = (sin th / th - cos th) / 2.
inline double f22_closed(double theta) {
    if (theta == 0.0) return 1.0 / sphere_area(3);
    if (theta >= kPi) return 0.0;
    double s = std::sin(theta);
    double I = 0.5 * (s / theta - std::cos(theta));
    return theta * I / (sphere_area(3) * s * s * s);
}

} // namespace flagmv
