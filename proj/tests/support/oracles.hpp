#pragma once

// Reference evaluators used only by the tests. They never call the closed-form
// wrapped densities of the library, so agreement is an independent check.

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <complex>
#include <numbers>

#include "wrapxg/linear.hpp"
#include "wrapxg/wrapped.hpp"

namespace wrapxg::oracle {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Adaptive 61-point Gauss-Kronrod on [a, b].
template <typename F>
double integrate(F&& f, double a, double b, double tol = 1e-14) {
    double err = 0.0;
    return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 15, tol, &err);
}

/// Lattice sum of the linear density, continued until the terms are negligible.
inline double lattice_pdf(WrappedModelKind kind, double theta, double lambda) {
    const Rate r(lambda);
    double s = 0.0;
    for (int k = 0; k <= 100000; ++k) {
        const double term = linear_pdf(linear_base(kind), theta + kTwoPi * k, r);
        s += term;
        if (term <= 1e-18 * s && k > 2) break;
    }
    return s;
}

/// F(theta) of the wrapped law as sum_k [F(theta + 2 pi k) - F(2 pi k)] of the linear CDF.
inline double lattice_cdf(WrappedModelKind kind, double theta, double lambda) {
    const Rate r(lambda);
    const auto base = linear_base(kind);
    double s = 0.0;
    for (int k = 0; k <= 100000; ++k) {
        const double d = linear_cdf(base, theta + kTwoPi * k, r) - linear_cdf(base, kTwoPi * k, r);
        s += d;
        if (std::abs(d) <= 1e-18 * std::abs(s) && k > 2) break;
    }
    return s;
}

/// E[e^{i p theta}] by quadrature of the lattice-sum density.
inline std::complex<double> trig_moment(int p, double lambda, WrappedModelKind kind = WrappedModelKind::WRXG) {
    const auto re = integrate([&](double t) { return std::cos(p * t) * lattice_pdf(kind, t, lambda); }, 0.0, kTwoPi);
    const auto im = integrate([&](double t) { return std::sin(p * t) * lattice_pdf(kind, t, lambda); }, 0.0, kTwoPi);
    return {re, im};
}

/// Central trigonometric moment E[e^{i p (theta - mu)}] by quadrature.
inline std::complex<double> central_moment(int p, double lambda, double mu) {
    const auto re = integrate(
        [&](double t) { return std::cos(p * (t - mu)) * lattice_pdf(WrappedModelKind::WRXG, t, lambda); }, 0.0, kTwoPi);
    const auto im = integrate(
        [&](double t) { return std::sin(p * (t - mu)) * lattice_pdf(WrappedModelKind::WRXG, t, lambda); }, 0.0, kTwoPi);
    return {re, im};
}

}  // namespace wrapxg::oracle
