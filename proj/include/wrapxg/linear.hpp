#pragma once

// Linear (unwrapped) distributions on the positive half-line:
// xgamma, Lindley and exponential.

#include <complex>
#include <cstdint>
#include <string_view>
#include <vector>

#include "wrapxg/rate.hpp"

namespace wrapxg {

enum class LinearModelKind { Xgamma, Lindley, Exponential };

[[nodiscard]] std::string_view to_string(LinearModelKind kind) noexcept;

/// xgamma density: lambda^2/(1+lambda) * (1 + lambda x^2 / 2) * exp(-lambda x).
[[nodiscard]] double xg_pdf(double x, Rate r);

/// xgamma distribution function.
[[nodiscard]] double xg_cdf(double x, Rate r);

/// xgamma characteristic function E[exp(i t X)], evaluated in complex arithmetic.
[[nodiscard]] std::complex<double> xg_cf(double t, Rate r);

/// Exact draws: Exp(lambda) with probability lambda/(1+lambda), otherwise Gamma(3, lambda).
[[nodiscard]] std::vector<double> xg_sample(Rate r, std::size_t n, std::uint64_t seed);

/// Weights of the (exponential, higher-shape gamma) mixture components.
struct MixtureWeights {
    double exponential;
    double gamma;
    int gamma_shape;
};

/// Mixture decomposition used by the samplers. Exponential has weight 1 on
/// its single component and gamma_shape 0.
[[nodiscard]] MixtureWeights mixture_weights(LinearModelKind kind, Rate r) noexcept;

[[nodiscard]] double linear_pdf(LinearModelKind kind, double x, Rate r);
[[nodiscard]] double linear_cdf(LinearModelKind kind, double x, Rate r);
[[nodiscard]] std::vector<double> linear_sample(LinearModelKind kind, Rate r, std::size_t n,
                                                std::uint64_t seed);

}  // namespace wrapxg
