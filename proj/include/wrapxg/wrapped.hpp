#pragma once

// Wrapping theta = X mod 2pi of the linear families, with closed-form
// circular densities and distribution functions plus a truncated lattice-sum
// reference evaluator.

#include <cstdint>
#include <optional>
#include <string_view>

#include "wrapxg/circular.hpp"
#include "wrapxg/linear.hpp"
#include "wrapxg/rate.hpp"

namespace wrapxg {

enum class WrappedModelKind { WRXG, WL, WE };

inline constexpr WrappedModelKind kAllWrappedModels[] = {WrappedModelKind::WRXG, WrappedModelKind::WL,
                                                         WrappedModelKind::WE};

[[nodiscard]] std::string_view to_string(WrappedModelKind kind) noexcept;
/// Accepts "wrxg", "wl", "we" (case-insensitive).
[[nodiscard]] std::optional<WrappedModelKind> parse_wrapped_model(std::string_view name);
[[nodiscard]] LinearModelKind linear_base(WrappedModelKind kind) noexcept;

/// Number of lattice terms kept beyond k = 0 and a bound on the omitted mass
/// sum_{k > k_max} f(theta + 2 pi k), valid uniformly for theta in [0, 2pi).
struct SeriesTruncation {
    int k_max = 0;
    double tail_bound = 0.0;
};

/// k_max = ceil(30 / (2 pi lambda)) + 5, with its tail bound.
[[nodiscard]] SeriesTruncation default_truncation(WrappedModelKind kind, Rate r);
/// Tail bound for an explicit k_max (may be +inf when the bound does not apply yet).
[[nodiscard]] SeriesTruncation truncation_with(WrappedModelKind kind, Rate r, int k_max);

/// Partial lattice sum sum_{k=0}^{k_max} f(theta + 2 pi k).
[[nodiscard]] double wrap_pdf_series(WrappedModelKind kind, Angle theta, Rate r, SeriesTruncation trunc);

/// Closed-form wrapped density with its rate-dependent constants cached, for
/// repeated evaluation at one rate (likelihoods, curves, GoF).
class WrappedDensity {
public:
    WrappedDensity(WrappedModelKind kind, Rate r);

    [[nodiscard]] WrappedModelKind kind() const noexcept { return kind_; }
    [[nodiscard]] Rate rate() const noexcept { return rate_; }

    // theta is a normalized radian value in [0, 2pi).
    [[nodiscard]] double pdf(double theta) const noexcept;
    [[nodiscard]] double log_pdf(double theta) const noexcept;
    [[nodiscard]] double cdf(double theta) const noexcept;

private:
    WrappedModelKind kind_;
    Rate rate_;
    double lambda_;
    double q_;          // e^{-2 pi lambda}
    double one_minus_q_;
    double scale_;      // lambda^2 / ((1 + lambda)(1 - q)), or lambda/(1 - q) for WE
    double log_scale_;
    double s1_;         // q / (1 - q)^2
    double s2_;         // q (1 + q) / (1 - q)^3
};

[[nodiscard]] double wrxg_pdf(Angle theta, Rate r);
[[nodiscard]] double wrxg_cdf(Angle theta, Rate r);
[[nodiscard]] double wl_pdf(Angle theta, Rate r);
[[nodiscard]] double wl_cdf(Angle theta, Rate r);
[[nodiscard]] double we_pdf(Angle theta, Rate r);
[[nodiscard]] double we_cdf(Angle theta, Rate r);

[[nodiscard]] double wrapped_pdf(WrappedModelKind kind, Angle theta, Rate r);
[[nodiscard]] double wrapped_cdf(WrappedModelKind kind, Angle theta, Rate r);

/// Linear draws reduced mod 2pi. Provenance is radians, not axial-doubled.
[[nodiscard]] CircularSample wrapped_sample(WrappedModelKind kind, Rate r, std::size_t n,
                                            std::uint64_t seed);

}  // namespace wrapxg
