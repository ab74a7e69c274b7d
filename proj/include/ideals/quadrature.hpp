#pragma once

#include <cmath>
#include <functional>

namespace ideals {

namespace detail {

inline double simpson_rule(double a, double fa, double b, double fb, double fm) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

template <class F>
double simpson_recurse(const F& f, double a, double fa, double b, double fb, double m, double fm,
                       double whole, double tol, int depth) {
    double lm = 0.5 * (a + m);
    double rm = 0.5 * (m + b);
    double flm = f(lm);
    double frm = f(rm);
    double left = simpson_rule(a, fa, m, fm, flm);
    double right = simpson_rule(m, fm, b, fb, frm);
    double delta = left + right - whole;
    if (depth <= 0 || std::fabs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return simpson_recurse(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
           simpson_recurse(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

// Adaptive Simpson on [a, b] with absolute tolerance tol.
template <class F>
double adaptive_simpson(const F& f, double a, double b, double tol, int max_depth = 48) {
    if (a == b) return 0.0;
    double fa = f(a), fb = f(b);
    double m = 0.5 * (a + b);
    double fm = f(m);
    double whole = detail::simpson_rule(a, fa, b, fb, fm);
    return detail::simpson_recurse(f, a, fa, b, fb, m, fm, whole, tol, max_depth);
}

}  // namespace ideals
