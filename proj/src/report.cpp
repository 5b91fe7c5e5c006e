#include "wrapxg/report.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>

#include "json.hpp"

namespace wrapxg {

using nlohmann::json;

// ---------------------------------------------------------------------------
// fit report assembly

FitReport build_fit_report(const CircularSample& s, std::span<const WrappedModelKind> kinds, const FitConfig& config) {
    FitReport r;
    r.n = s.size();
    r.source_unit = s.source_unit();
    r.axial_doubled = s.axial_doubled();
    r.sample_summary = sample_circular_summary(s);
    for (auto kind : kinds) {
        const auto fit = fit_mle(kind, s, config);
        r.models.push_back({fit, gof_report(kind, s, fit)});
        if (kind == WrappedModelKind::WRXG) r.wrxg_direction = model_mean_direction(fit);
    }
    if (r.models.empty()) return r;

    const auto pick = [&](const std::string& name, auto score, bool larger_is_better = false) {
        const ModelAssessment* best = nullptr;
        for (const auto& m : r.models) {
            const double v = score(m);
            if (std::isnan(v)) continue;
            if (!best || (larger_is_better ? v > score(*best) : v < score(*best))) best = &m;
        }
        if (best) r.best[name] = best->fit.model;
    };
    pick("minus2L", [](const ModelAssessment& m) { return -2.0 * m.fit.log_lik; });
    const double nan = std::numeric_limits<double>::quiet_NaN();
    pick("AIC", [&](const ModelAssessment& m) { return m.fit.criteria ? m.fit.criteria->aic : nan; });
    pick("CAIC", [&](const ModelAssessment& m) { return m.fit.criteria ? m.fit.criteria->caic : nan; });
    pick("BIC", [&](const ModelAssessment& m) { return m.fit.criteria ? m.fit.criteria->bic : nan; });
    pick("HQIC", [&](const ModelAssessment& m) { return m.fit.criteria ? m.fit.criteria->hqic : nan; });
    pick("W", [](const ModelAssessment& m) { return m.gof.cvm; });
    pick("A", [](const ModelAssessment& m) { return m.gof.anderson_darling; });
    pick("U2", [](const ModelAssessment& m) { return m.gof.watson; });
    pick("KS", [](const ModelAssessment& m) { return m.gof.ks_statistic; });
    pick("KS_p", [](const ModelAssessment& m) { return m.gof.ks_p_value; }, true);
    return r;
}

// ---------------------------------------------------------------------------
// JSON

namespace {

json num(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

double get_num(const json& j, const char* key) {
    const auto& v = j.at(key);
    return v.is_null() ? std::numeric_limits<double>::quiet_NaN() : v.get<double>();
}

std::optional<double> get_opt(const json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return j.at(key).get<double>();
}

std::vector<double> get_nums(const json& j) {
    std::vector<double> out;
    out.reserve(j.size());
    for (const auto& v : j) out.push_back(v.is_null() ? std::numeric_limits<double>::quiet_NaN() : v.get<double>());
    return out;
}

json opt(const std::optional<double>& v) { return v ? num(*v) : json(nullptr); }

WrappedModelKind model_from(const json& j) {
    const auto m = parse_wrapped_model(j.get<std::string>());
    if (!m) throw DataError("unknown model '" + j.get<std::string>() + "'");
    return *m;
}

FitStatus status_from(const std::string& s) {
    if (s == "converged") return FitStatus::Converged;
    if (s == "lower_boundary") return FitStatus::LowerBoundary;
    if (s == "upper_boundary") return FitStatus::UpperBoundary;
    throw DataError("unknown fit status '" + s + "'");
}

json to_json(const FitResult& f) {
    json j{{"model", to_string(f.model)},
           {"lambda_hat", f.lambda_hat.value()},
           {"std_error", num(f.std_error)},
           {"log_lik", f.log_lik},
           {"minus2L", -2.0 * f.log_lik},
           {"n", f.n},
           {"status", to_string(f.status)},
           {"evaluations", f.evaluations}};
    if (f.criteria) {
        j["criteria"] = {{"AIC", f.criteria->aic}, {"CAIC", f.criteria->caic}, {"BIC", f.criteria->bic},
                         {"HQIC", f.criteria->hqic}};
    } else {
        j["criteria"] = nullptr;
    }
    return j;
}

FitResult fit_from(const json& j) {
    FitResult f;
    f.model = model_from(j.at("model"));
    f.lambda_hat = Rate(j.at("lambda_hat").get<double>());
    f.std_error = get_num(j, "std_error");
    f.log_lik = get_num(j, "log_lik");
    f.n = j.at("n").get<std::size_t>();
    f.status = status_from(j.at("status").get<std::string>());
    f.evaluations = j.at("evaluations").get<int>();
    if (!j.at("criteria").is_null()) {
        const auto& c = j.at("criteria");
        f.criteria = InformationCriteria{get_num(c, "AIC"), get_num(c, "CAIC"),
                                         get_num(c, "BIC"), get_num(c, "HQIC")};
    }
    return f;
}

json to_json(const GofReport& g) {
    return {{"model", to_string(g.model)}, {"n", g.n},           {"KS_D", g.ks_statistic},
            {"KS_p", g.ks_p_value},        {"W", g.cvm},         {"A", g.anderson_darling},
            {"U2", g.watson}};
}

GofReport gof_from(const json& j) {
    GofReport g;
    g.model = model_from(j.at("model"));
    g.n = j.at("n").get<std::size_t>();
    g.ks_statistic = get_num(j, "KS_D");
    g.ks_p_value = get_num(j, "KS_p");
    g.cvm = get_num(j, "W");
    g.anderson_darling = get_num(j, "A");
    g.watson = get_num(j, "U2");
    return g;
}

json to_json(const EmpiricalSummary& s) {
    return {{"n", s.n},
            {"mean_direction", opt(s.mean_direction)},
            {"resultant_length", s.resultant_length},
            {"circ_variance", s.circ_variance},
            {"circ_stddev", num(s.circ_stddev)},
            {"skewness", opt(s.skewness)},
            {"kurtosis", opt(s.kurtosis)}};
}

EmpiricalSummary summary_from(const json& j) {
    EmpiricalSummary s;
    s.n = j.at("n").get<std::size_t>();
    s.mean_direction = get_opt(j, "mean_direction");
    s.resultant_length = get_num(j, "resultant_length");
    s.circ_variance = get_num(j, "circ_variance");
    s.circ_stddev = get_num(j, "circ_stddev");
    if (std::isnan(s.circ_stddev)) s.circ_stddev = std::numeric_limits<double>::infinity();
    s.skewness = get_opt(j, "skewness");
    s.kurtosis = get_opt(j, "kurtosis");
    return s;
}

json to_json(const FitReport& r) {
    json models = json::array();
    for (const auto& m : r.models) models.push_back({{"fit", to_json(m.fit)}, {"gof", to_json(m.gof)}});
    json best = json::object();
    for (const auto& [k, v] : r.best) best[k] = to_string(v);
    json dir = nullptr;
    if (r.wrxg_direction) {
        dir = {{"mean_direction", r.wrxg_direction->mean_direction},
               {"resultant_length", r.wrxg_direction->resultant_length}};
    }
    return {{"n", r.n},
            {"source_unit", to_string(r.source_unit)},
            {"axial_doubled", r.axial_doubled},
            {"sample_summary", to_json(r.sample_summary)},
            {"wrxg_model_direction", dir},
            {"models", models},
            {"best", best}};
}

FitReport fit_report_from(const json& j) {
    FitReport r;
    r.n = j.at("n").get<std::size_t>();
    r.source_unit = j.at("source_unit").get<std::string>() == "radians" ? AngleUnit::Radians : AngleUnit::Degrees;
    r.axial_doubled = j.at("axial_doubled").get<bool>();
    r.sample_summary = summary_from(j.at("sample_summary"));
    if (!j.at("wrxg_model_direction").is_null()) {
        const auto& d = j.at("wrxg_model_direction");
        r.wrxg_direction = DirectionSummary{get_num(d, "mean_direction"), get_num(d, "resultant_length")};
    }
    for (const auto& m : j.at("models")) r.models.push_back({fit_from(m.at("fit")), gof_from(m.at("gof"))});
    for (const auto& [k, v] : j.at("best").items()) r.best[k] = model_from(v);
    return r;
}

json to_json(const SimCell& c) {
    return {{"n", c.n},
            {"lambda", c.lambda_true},
            {"reps", c.reps},
            {"used", c.used},
            {"failed", c.failed},
            {"boundary", c.boundary},
            {"mean_estimate", c.mean_estimate},
            {"abs_bias", c.abs_bias},
            {"mse", c.mse},
            {"mre", c.mre},
            {"master_seed", c.master_seed}};
}

SimCell cell_from(const json& j) {
    SimCell c;
    c.n = j.at("n").get<std::size_t>();
    c.lambda_true = get_num(j, "lambda");
    c.reps = j.at("reps").get<std::size_t>();
    c.used = j.at("used").get<std::size_t>();
    c.failed = j.at("failed").get<std::size_t>();
    c.boundary = j.at("boundary").get<std::size_t>();
    c.mean_estimate = get_num(j, "mean_estimate");
    c.abs_bias = get_num(j, "abs_bias");
    c.mse = get_num(j, "mse");
    c.mre = get_num(j, "mre");
    c.master_seed = j.at("master_seed").get<std::uint64_t>();
    return c;
}

json to_json(const DiffReport& d) {
    json cells = json::array();
    for (const auto& c : d.cells) {
        cells.push_back({{"n", c.n},
                         {"lambda", c.lambda},
                         {"abs_bias_dev", num(c.abs_bias_dev)},
                         {"mse_dev", num(c.mse_dev)},
                         {"mean_dev", c.mean_dev},
                         {"abs_bias_ok", c.abs_bias_ok},
                         {"mse_ok", c.mse_ok},
                         {"mean_ok", c.mean_ok},
                         {"reference_mre_inconsistent", c.reference_mre_inconsistent},
                         {"reference_mre_implied", c.reference_mre_implied}});
    }
    return {{"cells", cells}, {"pass_fraction", d.pass_fraction()}, {"all_pass", d.all_pass()}};
}

DiffReport diff_from(const json& j) {
    DiffReport d;
    for (const auto& c : j.at("cells")) {
        CellDiff x;
        x.n = c.at("n").get<std::size_t>();
        x.lambda = get_num(c, "lambda");
        x.abs_bias_dev = get_num(c, "abs_bias_dev");
        x.mse_dev = get_num(c, "mse_dev");
        x.mean_dev = get_num(c, "mean_dev");
        x.abs_bias_ok = c.at("abs_bias_ok").get<bool>();
        x.mse_ok = c.at("mse_ok").get<bool>();
        x.mean_ok = c.at("mean_ok").get<bool>();
        x.reference_mre_inconsistent = c.at("reference_mre_inconsistent").get<bool>();
        x.reference_mre_implied = get_num(c, "reference_mre_implied");
        d.cells.push_back(x);
    }
    return d;
}

json to_json(const SimulationReport& s) {
    json cells = json::array();
    for (const auto& c : s.grid.cells) cells.push_back(to_json(c));
    return {{"lambdas", s.grid.lambdas},
            {"sizes", s.grid.sizes},
            {"reps", s.grid.reps},
            {"master_seed", s.grid.master_seed},
            {"quick", s.quick},
            {"cells", cells},
            {"comparison", s.comparison ? to_json(*s.comparison) : json(nullptr)}};
}

SimulationReport simulation_from(const json& j) {
    SimulationReport s;
    s.grid.lambdas = get_nums(j.at("lambdas"));
    s.grid.sizes = j.at("sizes").get<std::vector<std::size_t>>();
    s.grid.reps = j.at("reps").get<std::size_t>();
    s.grid.master_seed = j.at("master_seed").get<std::uint64_t>();
    s.quick = j.at("quick").get<bool>();
    for (const auto& c : j.at("cells")) s.grid.cells.push_back(cell_from(c));
    if (!j.at("comparison").is_null()) s.comparison = diff_from(j.at("comparison"));
    return s;
}

json to_json(const CharacterizationTable& t) {
    json rows = json::array();
    for (const auto& r : t.rows) rows.push_back({{"group", r.group}, {"symbol", r.symbol}, {"values", r.values}});
    return {{"lambdas", t.lambdas}, {"p_max", t.p_max}, {"rows", rows}};
}

CharacterizationTable table_from(const json& j) {
    CharacterizationTable t;
    t.lambdas = get_nums(j.at("lambdas"));
    t.p_max = j.at("p_max").get<int>();
    for (const auto& r : j.at("rows")) {
        t.rows.push_back({r.at("group").get<std::string>(), r.at("symbol").get<std::string>(),
                          get_nums(r.at("values"))});
    }
    return t;
}

json curves_json(const std::vector<ModelCurve>& curves) {
    json a = json::array();
    for (const auto& c : curves) a.push_back({{"model", to_string(c.model)}, {"lambda", c.lambda}, {"values", c.values}});
    return a;
}

std::vector<ModelCurve> curves_from(const json& j) {
    std::vector<ModelCurve> out;
    for (const auto& c : j) {
        out.push_back({model_from(c.at("model")), get_num(c, "lambda"), get_nums(c.at("values"))});
    }
    return out;
}

json to_json(const PlotData& p) {
    return {{"n", p.n},
            {"histogram", {{"edges", p.histogram.edges}, {"densities", p.histogram.densities}}},
            {"rose", {{"edges", p.rose.edges}, {"counts", p.rose.counts}}},
            {"curve_theta", p.curve_theta},
            {"pdf_curves", curves_json(p.pdf_curves)},
            {"ecdf_theta", p.ecdf_theta},
            {"ecdf", p.ecdf},
            {"cdf_overlays", curves_json(p.cdf_overlays)}};
}

PlotData plot_from(const json& j) {
    PlotData p;
    p.n = j.at("n").get<std::size_t>();
    p.histogram.edges = get_nums(j.at("histogram").at("edges"));
    p.histogram.densities = get_nums(j.at("histogram").at("densities"));
    p.rose.edges = get_nums(j.at("rose").at("edges"));
    p.rose.counts = j.at("rose").at("counts").get<std::vector<std::size_t>>();
    p.curve_theta = get_nums(j.at("curve_theta"));
    p.pdf_curves = curves_from(j.at("pdf_curves"));
    p.ecdf_theta = get_nums(j.at("ecdf_theta"));
    p.ecdf = get_nums(j.at("ecdf"));
    p.cdf_overlays = curves_from(j.at("cdf_overlays"));
    return p;
}

struct PayloadName {
    const char* operator()(const FitReport&) const { return "fit"; }
    const char* operator()(const SimulationReport&) const { return "simulation"; }
    const char* operator()(const CharacterizationTable&) const { return "characterization"; }
    const char* operator()(const PlotData&) const { return "plotdata"; }
};

}  // namespace

std::string to_json_string(const ReportDocument& doc, int indent) {
    json j{{"schema_version", doc.schema_version},
           {"command", doc.command},
           {"inputs_digest", doc.inputs_digest},
           {"payload_type", std::visit(PayloadName{}, doc.payload)},
           {"payload", std::visit([](const auto& p) { return to_json(p); }, doc.payload)}};
    return j.dump(indent);
}

ReportDocument parse_report(std::string_view json_text) {
    try {
        const auto j = json::parse(json_text);
        ReportDocument doc;
        doc.schema_version = j.at("schema_version").get<std::string>();
        doc.command = j.at("command").get<std::string>();
        doc.inputs_digest = j.at("inputs_digest").get<std::string>();
        const auto type = j.at("payload_type").get<std::string>();
        const auto& p = j.at("payload");
        if (type == "fit") {
            doc.payload = fit_report_from(p);
        } else if (type == "simulation") {
            doc.payload = simulation_from(p);
        } else if (type == "characterization") {
            doc.payload = table_from(p);
        } else if (type == "plotdata") {
            doc.payload = plot_from(p);
        } else {
            throw DataError("unknown payload type '" + type + "'");
        }
        return doc;
    } catch (const json::exception& e) {
        throw DataError(std::string("malformed report: ") + e.what());
    }
}

// ---------------------------------------------------------------------------
// CSV

namespace {

class CsvWriter {
public:
    CsvWriter(std::ostream& out, int digits) : out_(out), digits_(digits) {}

    void section(std::string_view name) {
        if (sections_++ > 0) out_ << '\n';
        out_ << "# " << name << '\n';
    }

    CsvWriter& field(std::string_view s) {
        sep();
        out_ << s;
        return *this;
    }
    CsvWriter& field(double v) {
        sep();
        if (std::isnan(v)) {
            out_ << "NA";
        } else {
            char buf[48];
            std::snprintf(buf, sizeof buf, "%.*g", digits_, v);
            out_ << buf;
        }
        return *this;
    }
    CsvWriter& field(std::size_t v) {
        sep();
        out_ << v;
        return *this;
    }
    CsvWriter& field(std::optional<double> v) {
        return v ? field(*v) : field(std::string_view("NA"));
    }
    void end() {
        out_ << '\n';
        first_ = true;
    }

private:
    void sep() {
        if (!first_) out_ << ',';
        first_ = false;
    }
    std::ostream& out_;
    int digits_;
    int sections_ = 0;
    bool first_ = true;
};

void csv(CsvWriter& w, const FitReport& r) {
    w.section("models");
    for (auto h : {"model", "lambda_hat", "std_error", "minus2L", "AIC", "CAIC", "BIC", "HQIC", "W", "A", "U2", "KS_D",
                   "KS_p", "status"}) {
        w.field(std::string_view(h));
    }
    w.end();
    const double nan = std::numeric_limits<double>::quiet_NaN();
    for (const auto& m : r.models) {
        const auto& c = m.fit.criteria;
        w.field(to_string(m.fit.model)).field(m.fit.lambda_hat.value()).field(m.fit.std_error).field(-2.0 * m.fit.log_lik);
        w.field(c ? c->aic : nan).field(c ? c->caic : nan).field(c ? c->bic : nan).field(c ? c->hqic : nan);
        w.field(m.gof.cvm).field(m.gof.anderson_darling).field(m.gof.watson).field(m.gof.ks_statistic);
        w.field(m.gof.ks_p_value).field(to_string(m.fit.status));
        w.end();
    }
    w.section("directions");
    w.field(std::string_view("source")).field(std::string_view("mean_direction")).field(std::string_view("resultant_length"));
    w.end();
    w.field(std::string_view("sample")).field(r.sample_summary.mean_direction).field(r.sample_summary.resultant_length);
    w.end();
    if (r.wrxg_direction) {
        w.field(std::string_view("WRXG")).field(r.wrxg_direction->mean_direction).field(r.wrxg_direction->resultant_length);
        w.end();
    }
    w.section("best");
    w.field(std::string_view("criterion")).field(std::string_view("model"));
    w.end();
    for (const auto& [k, v] : r.best) {
        w.field(k).field(to_string(v));
        w.end();
    }
}

void csv(CsvWriter& w, const SimulationReport& s) {
    w.section("cells");
    for (auto h : {"n", "lambda", "reps", "used", "failed", "boundary", "mean_estimate", "abs_bias", "mse", "mre"}) {
        w.field(std::string_view(h));
    }
    w.end();
    for (const auto& c : s.grid.cells) {
        w.field(c.n).field(c.lambda_true).field(c.reps).field(c.used).field(c.failed).field(c.boundary);
        w.field(c.mean_estimate).field(c.abs_bias).field(c.mse).field(c.mre);
        w.end();
    }
    if (!s.comparison) return;
    w.section("comparison");
    for (auto h : {"n", "lambda", "abs_bias_dev", "mse_dev", "mean_dev", "abs_bias_ok", "mse_ok", "mean_ok",
                   "reference_mre_inconsistent", "reference_mre_implied"}) {
        w.field(std::string_view(h));
    }
    w.end();
    const auto b = [](bool x) { return std::string_view(x ? "1" : "0"); };
    for (const auto& c : s.comparison->cells) {
        w.field(c.n).field(c.lambda).field(c.abs_bias_dev).field(c.mse_dev).field(c.mean_dev);
        w.field(b(c.abs_bias_ok)).field(b(c.mse_ok)).field(b(c.mean_ok)).field(b(c.reference_mre_inconsistent));
        w.field(c.reference_mre_implied);
        w.end();
    }
}

void csv(CsvWriter& w, const CharacterizationTable& t) {
    w.section("characteristics");
    w.field(std::string_view("group")).field(std::string_view("symbol"));
    for (double l : t.lambdas) {
        char buf[48] = "lambda=";
        const auto res = std::to_chars(buf + 7, buf + sizeof buf, l);
        w.field(std::string_view(buf, static_cast<std::size_t>(res.ptr - buf)));
    }
    w.end();
    for (const auto& r : t.rows) {
        w.field(r.group).field(r.symbol);
        for (double v : r.values) w.field(v);
        w.end();
    }
}

void csv(CsvWriter& w, const PlotData& p) {
    w.section("histogram");
    w.field(std::string_view("lower")).field(std::string_view("upper")).field(std::string_view("density"));
    w.end();
    for (std::size_t i = 0; i < p.histogram.densities.size(); ++i) {
        w.field(p.histogram.edges[i]).field(p.histogram.edges[i + 1]).field(p.histogram.densities[i]);
        w.end();
    }
    w.section("rose");
    w.field(std::string_view("lower")).field(std::string_view("upper")).field(std::string_view("count"));
    w.end();
    for (std::size_t i = 0; i < p.rose.counts.size(); ++i) {
        w.field(p.rose.edges[i]).field(p.rose.edges[i + 1]).field(p.rose.counts[i]);
        w.end();
    }
    w.section("pdf");
    w.field(std::string_view("theta"));
    for (const auto& c : p.pdf_curves) w.field(to_string(c.model));
    w.end();
    for (std::size_t i = 0; i < p.curve_theta.size(); ++i) {
        w.field(p.curve_theta[i]);
        for (const auto& c : p.pdf_curves) w.field(c.values[i]);
        w.end();
    }
    w.section("ecdf");
    w.field(std::string_view("theta")).field(std::string_view("ecdf"));
    for (const auto& c : p.cdf_overlays) w.field(to_string(c.model));
    w.end();
    for (std::size_t i = 0; i < p.ecdf_theta.size(); ++i) {
        w.field(p.ecdf_theta[i]).field(p.ecdf[i]);
        for (const auto& c : p.cdf_overlays) w.field(c.values[i]);
        w.end();
    }
}

}  // namespace

void write_csv(std::ostream& out, const ReportDocument& doc, int significant_digits) {
    out << "# schema_version=" << doc.schema_version << " command=" << doc.command
        << " inputs_digest=" << doc.inputs_digest << '\n';
    CsvWriter w(out, significant_digits);
    std::visit([&](const auto& p) { csv(w, p); }, doc.payload);
}

}  // namespace wrapxg
