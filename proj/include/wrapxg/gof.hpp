#pragma once

// Goodness-of-fit statistics of a circular sample against a model CDF.
// The span overloads take probability-integral-transformed values u_i = F(theta_i)
// in any order; sorting happens internally.

#include <span>

#include "wrapxg/circular.hpp"
#include "wrapxg/estimate.hpp"
#include "wrapxg/wrapped.hpp"

namespace wrapxg {

struct KsResult {
    double statistic;
    double p_value;
};

/// Asymptotic Kolmogorov survival function P(K > x).
[[nodiscard]] double kolmogorov_pvalue(double x);

[[nodiscard]] KsResult ks_test(std::span<const double> u);
[[nodiscard]] double cvm_stat(std::span<const double> u);
/// Throws DataError when any u is exactly 0 or 1.
[[nodiscard]] double ad_stat(std::span<const double> u);
[[nodiscard]] double watson_u2(std::span<const double> u);

/// F(theta_i) for every sample angle, in sample order.
[[nodiscard]] std::vector<double> probability_transform(const CircularSample& s, const WrappedDensity& model);

[[nodiscard]] KsResult ks_test(const CircularSample& s, const WrappedDensity& model);
[[nodiscard]] double cvm_stat(const CircularSample& s, const WrappedDensity& model);
[[nodiscard]] double ad_stat(const CircularSample& s, const WrappedDensity& model);
[[nodiscard]] double watson_u2(const CircularSample& s, const WrappedDensity& model);

struct GofReport {
    WrappedModelKind model = WrappedModelKind::WRXG;
    std::size_t n = 0;
    double ks_statistic = 0.0;
    double ks_p_value = 0.0;
    double cvm = 0.0;
    double anderson_darling = 0.0;
    double watson = 0.0;
};

/// All statistics for a fit computed on the same sample. The K-S p-value uses
/// the unadjusted asymptotic law although lambda was estimated from the data.
/// anderson_darling is NaN when the fitted CDF reaches 0 or 1 at a sample point.
[[nodiscard]] GofReport gof_report(WrappedModelKind kind, const CircularSample& s, const FitResult& fit);

}  // namespace wrapxg
