// Command-line front end: characterize, fit, sample, simulate, plotdata, validate.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "wrapxg/io.hpp"
#include "wrapxg/report.hpp"

namespace {

using namespace wrapxg;

enum ExitCode : int { kOk = 0, kUsage = 1, kData = 2, kNumerical = 3 };

AngleUnit parse_unit(const std::string& s) {
    if (s == "deg" || s == "degrees") return AngleUnit::Degrees;
    if (s == "rad" || s == "radians") return AngleUnit::Radians;
    throw DomainError("unit must be deg or rad, got '" + s + "'");
}

std::vector<WrappedModelKind> parse_models(const std::string& s) {
    if (s == "all") return {std::begin(kAllWrappedModels), std::end(kAllWrappedModels)};
    const auto m = parse_wrapped_model(s);
    if (!m) throw DomainError("model must be wrxg, wl, we or all, got '" + s + "'");
    return {*m};
}

void emit(const ReportDocument& doc, const std::string& format) {
    if (format == "json") {
        std::cout << to_json_string(doc) << '\n';
    } else {
        write_csv(std::cout, doc);
    }
}

template <typename T>
std::string join(const std::vector<T>& v) {
    std::ostringstream ss;
    ss.precision(17);
    for (std::size_t i = 0; i < v.size(); ++i) ss << (i ? "," : "") << v[i];
    return ss.str();
}

unsigned worker_threads() { return std::max(1u, std::thread::hardware_concurrency()); }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Wrapped xgamma circular distribution toolkit"};
    app.require_subcommand(1);
    const auto formats = CLI::IsMember({"csv", "json"});

    // characterize
    auto* characterize = app.add_subcommand("characterize", "Trigonometric moments and circular summaries over rates");
    std::vector<double> char_lambdas{0.1, 0.7, 1.0, 2.5, 4.0, 8.0};
    int p_max = 2;
    std::string char_format = "json";
    characterize->add_option("--lambda", char_lambdas, "Rates (comma separated)")->delimiter(',');
    characterize->add_option("--p-max", p_max, "Highest moment order (>= 2)");
    characterize->add_option("--format", char_format)->check(formats);

    // fit
    auto* fit = app.add_subcommand("fit", "Fit wrapped models to an angle file");
    std::string fit_data, fit_unit = "deg", fit_model = "all", fit_format = "json";
    bool fit_axial = false;
    fit->add_option("--data", fit_data, "Angle file, one value per line")->required();
    fit->add_option("--unit", fit_unit, "deg or rad");
    fit->add_option("--model", fit_model, "wrxg, wl, we or all");
    fit->add_flag("--double-axial", fit_axial, "Double axial angles before normalization");
    fit->add_option("--format", fit_format)->check(formats);

    // sample
    auto* sample = app.add_subcommand("sample", "Draw wrapped angles (radians)");
    std::string sample_model = "wrxg", sample_out;
    double sample_lambda = 0.0;
    std::size_t sample_n = 0;
    std::uint64_t sample_seed = 1;
    sample->add_option("--model", sample_model, "wrxg, wl or we");
    sample->add_option("--lambda", sample_lambda, "Rate")->required();
    sample->add_option("--n", sample_n, "Number of angles")->required();
    sample->add_option("--seed", sample_seed, "64-bit seed");
    sample->add_option("--out", sample_out, "Output path (stdout when omitted)");

    // simulate
    auto* simulate = app.add_subcommand("simulate", "Monte-Carlo study of the WRXG estimator");
    GridConfig grid;
    bool quick = false;
    std::string sim_format = "json", sim_reference;
    simulate->add_option("--lambdas", grid.lambdas, "True rates")->delimiter(',');
    simulate->add_option("--sizes", grid.sizes, "Sample sizes")->delimiter(',');
    auto* reps_opt = simulate->add_option("--reps", grid.reps, "Replicates per cell");
    simulate->add_option("--seed", grid.master_seed, "Master seed");
    simulate->add_flag("--quick", quick, "1000 replicates and widened comparison tolerances");
    simulate->add_option("--format", sim_format)->check(formats);
    simulate->add_option("--reference", sim_reference, "Reference table CSV to compare against");

    // plotdata
    auto* plot = app.add_subcommand("plotdata", "Histogram, rose, fitted curves and ECDF overlays");
    std::string plot_data, plot_unit = "deg", plot_model = "all", plot_format = "json";
    bool plot_axial = false;
    std::size_t bins = 18, curve_points = 361;
    plot->add_option("--data", plot_data, "Angle file")->required();
    plot->add_option("--unit", plot_unit, "deg or rad");
    plot->add_flag("--double-axial", plot_axial, "Double axial angles before normalization");
    plot->add_option("--model", plot_model, "wrxg, wl, we or all");
    plot->add_option("--bins", bins, "Linear histogram bins");
    plot->add_option("--curve-points", curve_points, "Points per fitted density curve");
    plot->add_option("--format", plot_format)->check(formats);

    // validate
    auto* validate = app.add_subcommand("validate", "Check an angle file's format and size");
    std::string val_data, val_unit = "deg";
    std::size_t expect_n = 60;
    validate->add_option("--data", val_data, "Angle file")->required();
    validate->add_option("--unit", val_unit, "deg or rad");
    validate->add_option("--expect-n", expect_n, "Expected number of observations");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (*characterize) {
            std::vector<Rate> rates;
            for (double l : char_lambdas) rates.emplace_back(l);
            ReportDocument doc;
            doc.command = "characterize";
            doc.inputs_digest = content_digest("lambda=" + join(char_lambdas) + ";p_max=" + std::to_string(p_max));
            doc.payload = characterize_table(rates, p_max);
            emit(doc, char_format);
        } else if (*fit) {
            const auto unit = parse_unit(fit_unit);
            const auto kinds = parse_models(fit_model);
            const auto bytes = read_file(fit_data);
            const auto s = parse_angles(bytes, unit, fit_axial, fit_data);
            ReportDocument doc;
            doc.command = "fit";
            doc.inputs_digest = content_digest(bytes);
            doc.payload = build_fit_report(s, kinds);
            emit(doc, fit_format);
        } else if (*sample) {
            const auto kinds = parse_models(sample_model);
            if (kinds.size() != 1) throw DomainError("sample needs a single model");
            if (sample_n < 1) throw DomainError("--n must be >= 1");
            const auto s = wrapped_sample(kinds.front(), Rate(sample_lambda), sample_n, sample_seed);
            if (sample_out.empty()) {
                std::cout << format_angles(s);
            } else {
                write_angles(sample_out, s);
            }
        } else if (*simulate) {
            if (quick && reps_opt->count() == 0) grid.reps = kQuickReps;
            grid.options.threads = worker_threads();
            SimulationReport report;
            report.quick = quick;
            report.grid = simulate_grid(grid);
            std::string digest_src = "lambdas=" + join(grid.lambdas) + ";sizes=" + join(grid.sizes) +
                                     ";reps=" + std::to_string(grid.reps) + ";seed=" + std::to_string(grid.master_seed);
            if (!sim_reference.empty()) {
                const auto ref = load_reference(sim_reference);
                report.comparison = compare_to_reference(report.grid, ref,
                                                         quick ? TolerancePolicy::quick() : TolerancePolicy::full());
                digest_src += ";reference=" + content_digest(read_file(sim_reference));
            }
            ReportDocument doc;
            doc.command = "simulate";
            doc.inputs_digest = content_digest(digest_src);
            doc.payload = std::move(report);
            emit(doc, sim_format);
        } else if (*plot) {
            const auto unit = parse_unit(plot_unit);
            const auto kinds = parse_models(plot_model);
            const auto bytes = read_file(plot_data);
            const auto s = parse_angles(bytes, unit, plot_axial, plot_data);
            std::vector<FitResult> fits;
            for (auto k : kinds) fits.push_back(fit_mle(k, s));
            ReportDocument doc;
            doc.command = "plotdata";
            doc.inputs_digest = content_digest(bytes);
            doc.payload = make_plot_data(s, fits, bins, curve_points);
            emit(doc, plot_format);
        } else if (*validate) {
            const auto check = validate_angle_file(val_data, parse_unit(val_unit), expect_n);
            std::cout << (check.ok ? "valid" : "invalid") << ": n=" << check.n << " (" << check.message << ")\n";
            return check.ok ? kOk : kData;
        }
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const DataError& e) {
        std::cerr << "data error: " << e.what() << '\n';
        return kData;
    } catch (const NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return kNumerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kNumerical;
    }
    return kOk;
}
