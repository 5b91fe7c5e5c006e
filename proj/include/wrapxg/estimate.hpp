#pragma once

// Likelihood-based fitting of the one-parameter wrapped models.

#include <optional>

#include "wrapxg/circular.hpp"
#include "wrapxg/rate.hpp"
#include "wrapxg/wrapped.hpp"

namespace wrapxg {

struct InformationCriteria {
    double aic = 0.0;
    double caic = 0.0;
    double bic = 0.0;
    double hqic = 0.0;
};

/// AIC, CAIC, BIC and HQIC for k free parameters and n observations.
/// Requires n > k + 1 and n >= 3.
[[nodiscard]] InformationCriteria information_criteria(double log_lik, int k, std::size_t n);

/// Sum over observations of ln g(theta_i; lambda).
[[nodiscard]] double log_likelihood(WrappedModelKind kind, Rate r, const CircularSample& s);

enum class Parameterization { LogRate, Rate };

struct FitConfig {
    double lower = 1e-3;
    double upper = 1e3;
    double rel_tol = 1e-8;
    int grid_points = 21;
    /// Relative distance to a bound under which a maximizer counts as a boundary solution.
    double boundary_tol = 1e-6;
    Parameterization parameterization = Parameterization::LogRate;
};

enum class FitStatus { Converged, LowerBoundary, UpperBoundary };

[[nodiscard]] std::string_view to_string(FitStatus status) noexcept;

struct FitResult {
    WrappedModelKind model = WrappedModelKind::WRXG;
    Rate lambda_hat{1.0};
    /// Wald standard error from observed information; NaN when the observed
    /// information is not positive (boundary solutions).
    double std_error = 0.0;
    double log_lik = 0.0;
    std::size_t n = 0;
    /// Absent when the sample is too small for the criteria to be defined.
    std::optional<InformationCriteria> criteria;
    FitStatus status = FitStatus::Converged;
    int evaluations = 0;

    [[nodiscard]] bool boundary() const noexcept { return status != FitStatus::Converged; }
};

/// Maximizes the log-likelihood over [lower, upper]: a log-spaced grid picks the
/// bracket, Brent refines inside it, and the result is checked to dominate the
/// grid. Throws NumericalError if no finite likelihood is found or the check fails.
[[nodiscard]] FitResult fit_mle(WrappedModelKind kind, const CircularSample& s, const FitConfig& config = {});

/// Observed information -d2 l / d lambda2 by central differences, step max(1e-5, 1e-4 lambda).
[[nodiscard]] double observed_information(WrappedModelKind kind, Rate r, const CircularSample& s);

struct DirectionSummary {
    double mean_direction;
    double resultant_length;
};

/// Mean direction and resultant length implied by a fitted WRXG model.
[[nodiscard]] DirectionSummary model_mean_direction(const FitResult& fit);

}  // namespace wrapxg
