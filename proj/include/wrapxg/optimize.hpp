#pragma once

#include <cmath>
#include <limits>
#include <utility>

namespace wrapxg {

struct MinimizeResult {
    double x;
    double fx;
    int evaluations;
};

/// Brent's derivative-free minimizer (golden section with parabolic steps) on [a, b].
/// Stops when the bracket half-width falls below 2 (rel_tol |x| + abs_tol).
template <typename F>
MinimizeResult brent_minimize(F&& f, double a, double b, double rel_tol, double abs_tol, int max_iter = 200) {
    constexpr double golden = 0.3819660112501051;  // (3 - sqrt 5) / 2
    if (a > b) std::swap(a, b);
    double x = a + golden * (b - a);
    double w = x, v = x;
    double fx = f(x);
    double fw = fx, fv = fx;
    double d = 0.0, e = 0.0;
    int evals = 1;

    for (int it = 0; it < max_iter; ++it) {
        const double mid = 0.5 * (a + b);
        const double tol1 = rel_tol * std::abs(x) + abs_tol;
        const double tol2 = 2.0 * tol1;
        if (std::abs(x - mid) <= tol2 - 0.5 * (b - a)) break;

        bool golden_step = true;
        if (std::abs(e) > tol1) {
            double r = (x - w) * (fx - fv);
            double q = (x - v) * (fx - fw);
            double p = (x - v) * q - (x - w) * r;
            q = 2.0 * (q - r);
            if (q > 0.0) p = -p;
            q = std::abs(q);
            const double e_prev = e;
            e = d;
            if (std::abs(p) < std::abs(0.5 * q * e_prev) && p > q * (a - x) && p < q * (b - x)) {
                d = p / q;
                const double u = x + d;
                if (u - a < tol2 || b - u < tol2) d = (mid >= x) ? tol1 : -tol1;
                golden_step = false;
            }
        }
        if (golden_step) {
            e = (x >= mid) ? a - x : b - x;
            d = golden * e;
        }
        const double u = std::abs(d) >= tol1 ? x + d : x + (d > 0.0 ? tol1 : -tol1);
        const double fu = f(u);
        ++evals;
        if (fu <= fx) {
            if (u >= x) a = x; else b = x;
            v = w; fv = fw;
            w = x; fw = fx;
            x = u; fx = fu;
        } else {
            if (u < x) a = u; else b = u;
            if (fu <= fw || w == x) {
                v = w; fv = fw;
                w = u; fw = fu;
            } else if (fu <= fv || v == x || v == w) {
                v = u; fv = fu;
            }
        }
    }
    return {x, fx, evals};
}

}  // namespace wrapxg
