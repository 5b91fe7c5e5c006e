#pragma once

// Monte-Carlo study of the WRXG maximum-likelihood estimator over a grid of
// true rates and sample sizes.

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "wrapxg/estimate.hpp"
#include "wrapxg/rate.hpp"

namespace wrapxg {

struct SimCell {
    double lambda_true = 0.0;
    std::size_t n = 0;
    std::size_t reps = 0;      // requested replicates
    std::size_t used = 0;      // replicates that entered the aggregates
    std::size_t failed = 0;    // fits that threw and were excluded
    std::size_t boundary = 0;  // fits that ended on a search bound (kept)
    double mean_estimate = 0.0;
    double abs_bias = 0.0;
    double mse = 0.0;
    double mre = 0.0;
    std::uint64_t master_seed = 0;
};

struct SimOptions {
    /// Worker threads; results do not depend on this.
    unsigned threads = 1;
    FitConfig fit{};
    /// Maximum tolerated fraction of failed fits before simulate_cell throws.
    double max_failure_fraction = 0.01;
};

/// Seed of replicate `rep` in the cell for (lambda, n). Depends only on the
/// master seed and the cell's parameters, so a cell reproduces on its own.
[[nodiscard]] std::uint64_t replicate_seed(std::uint64_t master_seed, double lambda, std::size_t n,
                                           std::size_t rep) noexcept;

/// Per-replicate estimates in replicate order; NaN marks a failed fit.
[[nodiscard]] std::vector<double> replicate_estimates(Rate lambda_true, std::size_t n, std::size_t reps,
                                                      std::uint64_t master_seed, const SimOptions& options = {});

[[nodiscard]] SimCell simulate_cell(Rate lambda_true, std::size_t n, std::size_t reps, std::uint64_t master_seed,
                                    const SimOptions& options = {});

struct GridConfig {
    std::vector<double> lambdas{0.1, 0.7, 1.0, 2.5, 4.0, 8.0};
    std::vector<std::size_t> sizes{30, 80, 100, 200, 350};
    std::size_t reps = 10000;
    std::uint64_t master_seed = 20190315;
    SimOptions options{};
};

inline constexpr std::size_t kQuickReps = 1000;

struct SimGrid {
    std::vector<double> lambdas;
    std::vector<std::size_t> sizes;
    std::size_t reps = 0;
    std::uint64_t master_seed = 0;
    /// n-major, lambda-minor.
    std::vector<SimCell> cells;

    [[nodiscard]] const SimCell& at(std::size_t n, double lambda) const;
};

[[nodiscard]] SimGrid simulate_grid(const GridConfig& config);

/// Published-style values for one (n, lambda) cell.
struct ReferenceCell {
    std::size_t n = 0;
    double lambda = 0.0;
    double mean_estimate = 0.0;
    double abs_bias = 0.0;
    double mse = 0.0;
    double mre = 0.0;
};

struct ReferenceTable {
    std::vector<ReferenceCell> cells;
};

/// CSV with header n,lambda,mean_estimate,abs_bias,mse,mre.
[[nodiscard]] ReferenceTable load_reference(const std::filesystem::path& path);
[[nodiscard]] ReferenceTable reference_from(const SimGrid& grid);

struct TolerancePolicy {
    double abs_bias_rel = 0.15;
    double mse_rel = 0.15;
    /// Mean estimate tolerance as a multiple of lambda.
    double mean_per_lambda = 0.01;
    /// Relative slack when checking the reference's own mre = |bias|/lambda.
    double identity_rel = 1e-3;

    [[nodiscard]] static TolerancePolicy full() { return {}; }
    [[nodiscard]] static TolerancePolicy quick() { return {0.40, 0.40, 0.04, 1e-3}; }
};

struct CellDiff {
    std::size_t n = 0;
    double lambda = 0.0;
    double abs_bias_dev = 0.0;  // relative
    double mse_dev = 0.0;       // relative
    double mean_dev = 0.0;      // absolute
    bool abs_bias_ok = false;
    bool mse_ok = false;
    bool mean_ok = false;
    /// Reference mre disagrees with its own |bias|/lambda.
    bool reference_mre_inconsistent = false;
    double reference_mre_implied = 0.0;
};

struct DiffReport {
    std::vector<CellDiff> cells;
    [[nodiscard]] double pass_fraction() const;  // over (|bias|, mse) checks
    [[nodiscard]] bool all_pass() const;
};

/// Throws DomainError when the reference does not cover exactly the grid's cells.
[[nodiscard]] DiffReport compare_to_reference(const SimGrid& grid, const ReferenceTable& reference,
                                              const TolerancePolicy& policy);

}  // namespace wrapxg
