#pragma once

// Trigonometric moments and circular summary measures of the wrapped xgamma
// distribution, plus empirical counterparts for samples.

#include <complex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wrapxg/circular.hpp"
#include "wrapxg/rate.hpp"

namespace wrapxg {

/// phi(p) = E[e^{i p theta}]. For a wrapped variable this is the linear
/// characteristic function evaluated at the integer p.
[[nodiscard]] std::complex<double> wrxg_cf(int p, Rate r);

struct TrigMomentSet {
    int p = 0;
    double rho = 0.0;        // |phi(p)|
    double mu = 0.0;         // arg phi(p), in [0, 2pi)
    double alpha = 0.0;      // rho cos mu
    double beta = 0.0;       // rho sin mu
    double alpha_bar = 0.0;  // rho cos(mu - p mu_1)
    double beta_bar = 0.0;   // rho sin(mu - p mu_1)
};

/// Moments of order p >= 1. Angles come from std::arg on the complex value,
/// so the quadrant is always right.
[[nodiscard]] TrigMomentSet trig_moments(int p, Rate r);

/// |phi(p)| from the magnitude closed form
/// lambda^2/(1+lambda) sqrt(((lambda^2+lambda-p^2)^2 + 4 p^2 lambda^2) / (lambda^2+p^2)^3).
[[nodiscard]] double resultant_length_closed_form(int p, Rate r);

/// The real two-arctangent composition 3 atan(p/lambda) - atan(2 p lambda/(lambda^2+lambda-p^2)).
/// Agrees with arg phi(p) (mod 2pi) only when lambda^2 + lambda - p^2 > 0; on the
/// other branch it is off by pi. Kept as a cross-check, never used for results.
[[nodiscard]] double arctan_form_direction(int p, Rate r);
[[nodiscard]] bool arctan_form_valid(int p, Rate r) noexcept;

struct CircularSummary {
    double mean_direction = 0.0;
    double resultant_length = 0.0;
    double circ_variance = 0.0;
    double circ_stddev = 0.0;
    double skewness = 0.0;
    double kurtosis = 0.0;
};

[[nodiscard]] CircularSummary circular_summary(Rate r);

/// One labelled row of the characterization table, one value per rate.
struct CharacteristicRow {
    std::string group;
    std::string symbol;
    std::vector<double> values;
};

struct CharacterizationTable {
    std::vector<double> lambdas;
    int p_max = 2;
    std::vector<CharacteristicRow> rows;
};

/// Rows: mu, rho, V0, sigma0, alpha_1..P, beta_1..P, alpha_bar_1..P,
/// beta_bar_1..P, zeta1, zeta2. p_max = 2 gives 14 rows.
[[nodiscard]] CharacterizationTable characterize_table(std::span<const Rate> lambdas, int p_max);

[[nodiscard]] std::vector<Rate> default_characterization_rates();

struct EmpiricalSummary {
    std::size_t n = 0;
    /// Empty when the resultant vector vanishes (direction undefined).
    std::optional<double> mean_direction;
    double resultant_length = 0.0;
    double circ_variance = 0.0;
    double circ_stddev = 0.0;
    /// Sample central-moment skewness/kurtosis; empty with the direction.
    std::optional<double> skewness;
    std::optional<double> kurtosis;
};

[[nodiscard]] EmpiricalSummary sample_circular_summary(const CircularSample& s);

}  // namespace wrapxg
