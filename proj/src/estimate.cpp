#include "wrapxg/estimate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "wrapxg/optimize.hpp"
#include "wrapxg/trig_moments.hpp"

namespace wrapxg {

InformationCriteria information_criteria(double log_lik, int k, std::size_t n) {
    if (k < 0) throw DomainError("parameter count must be >= 0");
    const double nd = static_cast<double>(n);
    if (n < 3 || nd <= k + 1.0) throw DomainError("information criteria need n >= 3 and n > k + 1");
    const double deviance = -2.0 * log_lik;
    InformationCriteria c;
    c.aic = deviance + 2.0 * k;
    c.caic = c.aic + 2.0 * k * (k + 1.0) / (nd - k - 1.0);
    c.bic = deviance + k * std::log(nd);
    c.hqic = deviance + 2.0 * k * std::log(std::log(nd));
    return c;
}

double log_likelihood(WrappedModelKind kind, Rate r, const CircularSample& s) {
    const WrappedDensity g(kind, r);
    double sum = 0.0;
    for (double t : s.angles()) sum += g.log_pdf(t);
    return sum;
}

std::string_view to_string(FitStatus status) noexcept {
    switch (status) {
        case FitStatus::Converged: return "converged";
        case FitStatus::LowerBoundary: return "lower_boundary";
        case FitStatus::UpperBoundary: return "upper_boundary";
    }
    return "unknown";
}

double observed_information(WrappedModelKind kind, Rate r, const CircularSample& s) {
    const double l = r.value();
    const double h = std::min(std::max(1e-5, 1e-4 * l), 0.5 * l);
    const double f0 = log_likelihood(kind, r, s);
    const double fp = log_likelihood(kind, Rate(l + h), s);
    const double fm = log_likelihood(kind, Rate(l - h), s);
    return -(fp - 2.0 * f0 + fm) / (h * h);
}

namespace {

struct Coordinate {
    Parameterization kind;
    [[nodiscard]] double to(double lambda) const { return kind == Parameterization::LogRate ? std::log(lambda) : lambda; }
    [[nodiscard]] double from(double u) const { return kind == Parameterization::LogRate ? std::exp(u) : u; }
};

}  // namespace

FitResult fit_mle(WrappedModelKind kind, const CircularSample& s, const FitConfig& config) {
    if (!(config.lower > 0.0) || !(config.upper > config.lower) || !std::isfinite(config.upper)) {
        throw DomainError("fit bounds must satisfy 0 < lower < upper < inf");
    }
    if (config.grid_points < 3) throw DomainError("grid needs at least 3 points");

    int evals = 0;
    const auto neg_ll = [&](double lambda) {
        ++evals;
        const double v = -log_likelihood(kind, Rate(lambda), s);
        return std::isfinite(v) ? v : std::numeric_limits<double>::infinity();
    };

    const int m = config.grid_points;
    const double log_lo = std::log(config.lower);
    const double log_hi = std::log(config.upper);
    std::vector<double> grid(static_cast<std::size_t>(m));
    std::vector<double> grid_val(grid.size());
    for (int i = 0; i < m; ++i) {
        const double u = log_lo + (log_hi - log_lo) * i / (m - 1);
        grid[i] = i == 0 ? config.lower : (i == m - 1 ? config.upper : std::exp(u));
        grid_val[i] = neg_ll(grid[i]);
    }
    const auto best_it = std::min_element(grid_val.begin(), grid_val.end());
    if (!std::isfinite(*best_it)) throw NumericalError("log-likelihood is not finite anywhere on the search grid");
    const int j = static_cast<int>(best_it - grid_val.begin());

    const Coordinate coord{config.parameterization};
    const auto objective = [&](double u) { return neg_ll(coord.from(u)); };
    const double abs_tol = config.parameterization == Parameterization::LogRate ? config.rel_tol : 0.0;
    const double rel_tol = config.parameterization == Parameterization::LogRate ? 0.0 : config.rel_tol;
    // Keep the parabolic steps away from rounding noise near u = 0.
    const double floor_tol = 1e-12;

    const auto search = [&](int left, int right) {
        return brent_minimize(objective, coord.to(grid[left]), coord.to(grid[right]), rel_tol,
                              abs_tol + floor_tol);
    };

    auto best = search(std::max(j - 1, 0), std::min(j + 1, m - 1));
    double lambda_hat = coord.from(best.x);
    // Bracket endpoints are never evaluated by Brent; a maximizer sitting on a
    // bound shows up as convergence to within tolerance of it.
    const double grid_best = *best_it;
    const double slack = 1e-12 * std::max(1.0, std::abs(grid_best));
    if (best.fx > grid_best + slack) {
        // Several local optima inside the bracket: split at the best grid point.
        MinimizeResult candidates[2] = {search(std::max(j - 1, 0), j), search(j, std::min(j + 1, m - 1))};
        const auto& c = candidates[0].fx <= candidates[1].fx ? candidates[0] : candidates[1];
        if (c.fx > grid_best + slack) {
            // Distinguish a genuine maximizer on a bound from a failed search.
            if (j == 0 || j == m - 1) {
                best = {coord.to(grid[j]), grid_best, 0};
            } else {
                throw NumericalError("likelihood maximizer does not dominate the search grid");
            }
        } else {
            best = c;
        }
        lambda_hat = coord.from(best.x);
    }
    lambda_hat = std::clamp(lambda_hat, config.lower, config.upper);

    FitResult fit;
    fit.model = kind;
    fit.lambda_hat = Rate(lambda_hat);
    fit.n = s.size();
    fit.log_lik = log_likelihood(kind, fit.lambda_hat, s);
    if (lambda_hat <= config.lower * (1.0 + config.boundary_tol)) {
        fit.status = FitStatus::LowerBoundary;
    } else if (lambda_hat >= config.upper * (1.0 - config.boundary_tol)) {
        fit.status = FitStatus::UpperBoundary;
    }
    const double info = observed_information(kind, fit.lambda_hat, s);
    fit.std_error = info > 0.0 ? std::sqrt(1.0 / info) : std::numeric_limits<double>::quiet_NaN();
    if (fit.n >= 3) fit.criteria = information_criteria(fit.log_lik, 1, fit.n);
    fit.evaluations = evals;
    return fit;
}

DirectionSummary model_mean_direction(const FitResult& fit) {
    if (fit.model != WrappedModelKind::WRXG) throw DomainError("model mean direction is defined for WRXG fits");
    const auto s = circular_summary(fit.lambda_hat);
    return {s.mean_direction, s.resultant_length};
}

}  // namespace wrapxg
