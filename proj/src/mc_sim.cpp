#include "wrapxg/mc_sim.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <thread>

#include "wrapxg/random.hpp"
#include "wrapxg/wrapped.hpp"

namespace wrapxg {

std::uint64_t replicate_seed(std::uint64_t master_seed, double lambda, std::size_t n, std::size_t rep) noexcept {
    const std::uint64_t cell = splitmix64(std::bit_cast<std::uint64_t>(lambda)) ^ (n * 0x9E3779B97F4A7C15ULL);
    return derive_seed(master_seed, cell, rep);
}

std::vector<double> replicate_estimates(Rate lambda_true, std::size_t n, std::size_t reps, std::uint64_t master_seed,
                                        const SimOptions& options) {
    if (reps < 1) throw DomainError("replicate count must be >= 1");
    if (n < 2) throw DomainError("sample size must be >= 2");
    std::vector<double> est(reps, std::numeric_limits<double>::quiet_NaN());

    const auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            const auto seed = replicate_seed(master_seed, lambda_true.value(), n, i);
            const auto sample = wrapped_sample(WrappedModelKind::WRXG, lambda_true, n, seed);
            try {
                est[i] = fit_mle(WrappedModelKind::WRXG, sample, options.fit).lambda_hat.value();
            } catch (const NumericalError&) {
                // left as NaN; counted by the caller
            }
        }
    };

    const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(reps)));
    if (threads == 1) {
        work(0, reps);
    } else {
        std::vector<std::jthread> pool;
        const std::size_t chunk = (reps + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
            const std::size_t b = t * chunk;
            const std::size_t e = std::min(reps, b + chunk);
            if (b < e) pool.emplace_back(work, b, e);
        }
    }
    return est;
}

SimCell simulate_cell(Rate lambda_true, std::size_t n, std::size_t reps, std::uint64_t master_seed,
                      const SimOptions& options) {
    const auto est = replicate_estimates(lambda_true, n, reps, master_seed, options);
    const double l = lambda_true.value();
    const double lo = options.fit.lower * (1.0 + options.fit.boundary_tol);
    const double hi = options.fit.upper * (1.0 - options.fit.boundary_tol);

    SimCell c;
    c.lambda_true = l;
    c.n = n;
    c.reps = reps;
    c.master_seed = master_seed;
    double sum = 0.0, sum_abs = 0.0, sum_sq = 0.0;
    // Ordered reduction: same result for any thread count.
    for (double x : est) {
        if (std::isnan(x)) {
            ++c.failed;
            continue;
        }
        if (x <= lo || x >= hi) ++c.boundary;
        ++c.used;
        sum += x;
        sum_abs += std::abs(x - l);
        sum_sq += (x - l) * (x - l);
    }
    if (static_cast<double>(c.failed) > options.max_failure_fraction * static_cast<double>(reps) || c.used == 0) {
        throw NumericalError("too many failed fits in cell n=" + std::to_string(n) + " lambda=" + std::to_string(l));
    }
    const double used = static_cast<double>(c.used);
    c.mean_estimate = sum / used;
    c.abs_bias = sum_abs / used;
    c.mse = sum_sq / used;
    c.mre = c.abs_bias / l;
    return c;
}

const SimCell& SimGrid::at(std::size_t n, double lambda) const {
    for (const auto& c : cells) {
        if (c.n == n && c.lambda_true == lambda) return c;
    }
    throw DomainError("no simulation cell for n=" + std::to_string(n) + " lambda=" + std::to_string(lambda));
}

SimGrid simulate_grid(const GridConfig& config) {
    if (config.lambdas.empty() || config.sizes.empty()) throw DomainError("simulation grid is empty");
    SimGrid g;
    g.lambdas = config.lambdas;
    g.sizes = config.sizes;
    g.reps = config.reps;
    g.master_seed = config.master_seed;
    for (std::size_t n : config.sizes) {
        for (double l : config.lambdas) {
            g.cells.push_back(simulate_cell(Rate(l), n, config.reps, config.master_seed, config.options));
        }
    }
    return g;
}

ReferenceTable load_reference(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open reference table " + path.string());
    ReferenceTable t;
    std::string line;
    std::size_t lineno = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {
            header_seen = true;
            if (line.rfind("n,", 0) == 0) continue;
        }
        std::stringstream ss(line);
        std::string field;
        std::vector<std::string> f;
        while (std::getline(ss, field, ',')) f.push_back(field);
        if (f.size() != 6) throw DataError("reference line " + std::to_string(lineno) + ": expected 6 fields");
        try {
            t.cells.push_back({static_cast<std::size_t>(std::stoul(f[0])), std::stod(f[1]), std::stod(f[2]),
                               std::stod(f[3]), std::stod(f[4]), std::stod(f[5])});
        } catch (const std::exception&) {
            throw DataError("reference line " + std::to_string(lineno) + ": non-numeric field");
        }
    }
    if (t.cells.empty()) throw DataError("reference table " + path.string() + " has no rows");
    return t;
}

ReferenceTable reference_from(const SimGrid& grid) {
    ReferenceTable t;
    for (const auto& c : grid.cells) t.cells.push_back({c.n, c.lambda_true, c.mean_estimate, c.abs_bias, c.mse, c.mre});
    return t;
}

double DiffReport::pass_fraction() const {
    if (cells.empty()) return 1.0;
    std::size_t ok = 0;
    for (const auto& c : cells) ok += static_cast<std::size_t>(c.abs_bias_ok) + static_cast<std::size_t>(c.mse_ok);
    return static_cast<double>(ok) / (2.0 * static_cast<double>(cells.size()));
}

bool DiffReport::all_pass() const {
    return std::all_of(cells.begin(), cells.end(),
                       [](const CellDiff& c) { return c.abs_bias_ok && c.mse_ok && c.mean_ok; });
}

namespace {

double relative_dev(double value, double ref) {
    if (ref == 0.0) return value == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    return (value - ref) / ref;
}

}  // namespace

DiffReport compare_to_reference(const SimGrid& grid, const ReferenceTable& reference, const TolerancePolicy& policy) {
    if (reference.cells.size() != grid.cells.size()) {
        throw DomainError("reference has " + std::to_string(reference.cells.size()) + " cells, grid has " +
                          std::to_string(grid.cells.size()));
    }
    DiffReport report;
    for (const auto& c : grid.cells) {
        const auto it = std::find_if(reference.cells.begin(), reference.cells.end(), [&](const ReferenceCell& r) {
            return r.n == c.n && std::abs(r.lambda - c.lambda_true) <= 1e-12 * std::max(1.0, c.lambda_true);
        });
        if (it == reference.cells.end()) {
            throw DomainError("reference lacks cell n=" + std::to_string(c.n) + " lambda=" + std::to_string(c.lambda_true));
        }
        CellDiff d;
        d.n = c.n;
        d.lambda = c.lambda_true;
        d.abs_bias_dev = relative_dev(c.abs_bias, it->abs_bias);
        d.mse_dev = relative_dev(c.mse, it->mse);
        d.mean_dev = c.mean_estimate - it->mean_estimate;
        d.abs_bias_ok = std::abs(d.abs_bias_dev) <= policy.abs_bias_rel;
        d.mse_ok = std::abs(d.mse_dev) <= policy.mse_rel;
        d.mean_ok = std::abs(d.mean_dev) <= policy.mean_per_lambda * c.lambda_true;
        d.reference_mre_implied = it->abs_bias / it->lambda;
        d.reference_mre_inconsistent =
            std::abs(it->mre - d.reference_mre_implied) > policy.identity_rel * d.reference_mre_implied;
        report.cells.push_back(d);
    }
    return report;
}

}  // namespace wrapxg
