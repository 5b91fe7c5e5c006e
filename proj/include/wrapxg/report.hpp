#pragma once

// Report documents emitted by the command-line tool, and their JSON/CSV forms.

#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "wrapxg/estimate.hpp"
#include "wrapxg/gof.hpp"
#include "wrapxg/mc_sim.hpp"
#include "wrapxg/plotdata.hpp"
#include "wrapxg/trig_moments.hpp"

namespace wrapxg {

inline constexpr std::string_view kSchemaVersion = "1";

struct ModelAssessment {
    FitResult fit;
    GofReport gof;
};

struct FitReport {
    std::size_t n = 0;
    AngleUnit source_unit = AngleUnit::Degrees;
    bool axial_doubled = false;
    EmpiricalSummary sample_summary;
    /// Mean direction and resultant length of the fitted WRXG model, when fitted.
    std::optional<DirectionSummary> wrxg_direction;
    std::vector<ModelAssessment> models;
    /// Criterion name -> best model. Smaller is better except "KS_p".
    std::map<std::string, WrappedModelKind> best;
};

/// Fits each model, runs the goodness-of-fit battery and ranks the models.
[[nodiscard]] FitReport build_fit_report(const CircularSample& s, std::span<const WrappedModelKind> kinds,
                                         const FitConfig& config = {});

struct SimulationReport {
    SimGrid grid;
    bool quick = false;
    std::optional<DiffReport> comparison;
};

using ReportPayload = std::variant<FitReport, SimulationReport, CharacterizationTable, PlotData>;

struct ReportDocument {
    std::string schema_version{kSchemaVersion};
    std::string command;
    std::string inputs_digest;
    ReportPayload payload;
};

/// Full-precision JSON; NaN is written as null.
[[nodiscard]] std::string to_json_string(const ReportDocument& doc, int indent = 2);
/// Inverse of to_json_string. Throws DataError on malformed input.
[[nodiscard]] ReportDocument parse_report(std::string_view json_text);

/// Sectioned CSV. Sections start with a "# name" line followed by a header row.
void write_csv(std::ostream& out, const ReportDocument& doc, int significant_digits = 6);

}  // namespace wrapxg
