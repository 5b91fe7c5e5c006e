#include "wrapxg/trig_moments.hpp"

#include <cmath>
#include <limits>

#include "wrapxg/linear.hpp"

namespace wrapxg {

std::complex<double> wrxg_cf(int p, Rate r) { return xg_cf(static_cast<double>(p), r); }

double resultant_length_closed_form(int p, Rate r) {
    const double l = r.value();
    const double pp = static_cast<double>(p) * p;
    const double re = l * l + l - pp;
    const double den = l * l + pp;
    return l * l / (1.0 + l) * std::sqrt((re * re + 4.0 * pp * l * l) / (den * den * den));
}

double arctan_form_direction(int p, Rate r) {
    const double l = r.value();
    const double pd = static_cast<double>(p);
    return 3.0 * std::atan(pd / l) - std::atan(2.0 * pd * l / (l * l + l - pd * pd));
}

bool arctan_form_valid(int p, Rate r) noexcept {
    const double l = r.value();
    return l * l + l - static_cast<double>(p) * p > 0.0;
}

namespace {

double direction_of(std::complex<double> z) { return normalize_angle(std::arg(z)); }

}  // namespace

TrigMomentSet trig_moments(int p, Rate r) {
    if (p < 1) throw DomainError("trigonometric moment order must be >= 1");
    const auto phi = wrxg_cf(p, r);
    const double mu1 = direction_of(wrxg_cf(1, r));
    TrigMomentSet m;
    m.p = p;
    m.rho = resultant_length_closed_form(p, r);
    m.mu = direction_of(phi);
    m.alpha = m.rho * std::cos(m.mu);
    m.beta = m.rho * std::sin(m.mu);
    const double central = m.mu - p * mu1;
    m.alpha_bar = m.rho * std::cos(central);
    m.beta_bar = m.rho * std::sin(central);
    return m;
}

CircularSummary circular_summary(Rate r) {
    const auto m1 = trig_moments(1, r);
    const auto m2 = trig_moments(2, r);
    CircularSummary s;
    s.mean_direction = m1.mu;
    s.resultant_length = m1.rho;
    s.circ_variance = 1.0 - m1.rho;
    s.circ_stddev = std::sqrt(-2.0 * std::log(1.0 - s.circ_variance));
    s.skewness = m2.beta_bar / std::pow(s.circ_variance, 1.5);
    s.kurtosis = (m2.alpha_bar - std::pow(1.0 - s.circ_variance, 4)) / (s.circ_variance * s.circ_variance);
    return s;
}

std::vector<Rate> default_characterization_rates() {
    return {Rate(0.1), Rate(0.7), Rate(1.0), Rate(2.5), Rate(4.0), Rate(8.0)};
}

CharacterizationTable characterize_table(std::span<const Rate> lambdas, int p_max) {
    if (p_max < 2) throw DomainError("p_max must be >= 2 for skewness and kurtosis");
    if (lambdas.empty()) throw DomainError("at least one rate is required");

    CharacterizationTable table;
    table.p_max = p_max;
    for (Rate r : lambdas) table.lambdas.push_back(r.value());

    const auto add = [&](std::string group, std::string symbol) -> std::vector<double>& {
        table.rows.push_back({std::move(group), std::move(symbol), {}});
        return table.rows.back().values;
    };
    const std::size_t first = 0;
    add("Mean direction", "mu");
    add("Resultant length", "rho");
    add("Circular variance", "V0");
    add("Circular standard deviation", "sigma0");
    for (int p = 1; p <= p_max; ++p) add("Non-central trigonometric moments", "alpha_" + std::to_string(p));
    for (int p = 1; p <= p_max; ++p) add("Non-central trigonometric moments", "beta_" + std::to_string(p));
    for (int p = 1; p <= p_max; ++p) add("Central trigonometric moments", "alpha_bar_" + std::to_string(p));
    for (int p = 1; p <= p_max; ++p) add("Central trigonometric moments", "beta_bar_" + std::to_string(p));
    add("Coefficient of skewness", "zeta1");
    add("Coefficient of kurtosis", "zeta2");

    const std::size_t P = static_cast<std::size_t>(p_max);
    for (Rate r : lambdas) {
        const auto s = circular_summary(r);
        std::size_t row = first;
        table.rows[row++].values.push_back(s.mean_direction);
        table.rows[row++].values.push_back(s.resultant_length);
        table.rows[row++].values.push_back(s.circ_variance);
        table.rows[row++].values.push_back(s.circ_stddev);
        std::vector<TrigMomentSet> ms;
        for (int p = 1; p <= p_max; ++p) ms.push_back(trig_moments(p, r));
        for (std::size_t i = 0; i < P; ++i) table.rows[row + i].values.push_back(ms[i].alpha);
        row += P;
        for (std::size_t i = 0; i < P; ++i) table.rows[row + i].values.push_back(ms[i].beta);
        row += P;
        for (std::size_t i = 0; i < P; ++i) table.rows[row + i].values.push_back(ms[i].alpha_bar);
        row += P;
        for (std::size_t i = 0; i < P; ++i) table.rows[row + i].values.push_back(ms[i].beta_bar);
        row += P;
        table.rows[row++].values.push_back(s.skewness);
        table.rows[row++].values.push_back(s.kurtosis);
    }
    return table;
}

EmpiricalSummary sample_circular_summary(const CircularSample& s) {
    const auto angles = s.angles();
    if (angles.empty()) throw DataError("empty sample");
    const double n = static_cast<double>(angles.size());
    double c = 0.0, sn = 0.0;
    for (double t : angles) {
        c += std::cos(t);
        sn += std::sin(t);
    }
    EmpiricalSummary out;
    out.n = angles.size();
    out.resultant_length = std::hypot(c, sn) / n;
    out.circ_variance = 1.0 - out.resultant_length;
    out.circ_stddev = out.resultant_length > 0.0 ? std::sqrt(-2.0 * std::log(out.resultant_length))
                                                 : std::numeric_limits<double>::infinity();
    // Below this the direction is dominated by rounding in the sums.
    constexpr double kUndefined = 1e-12;
    if (out.resultant_length <= kUndefined) return out;

    const double mu = normalize_angle(std::atan2(sn, c));
    out.mean_direction = mu;
    double c2 = 0.0, s2 = 0.0;
    for (double t : angles) {
        c2 += std::cos(2.0 * (t - mu));
        s2 += std::sin(2.0 * (t - mu));
    }
    c2 /= n;
    s2 /= n;
    const double v = out.circ_variance;
    if (v > 0.0) {
        out.skewness = s2 / std::pow(v, 1.5);
        out.kurtosis = (c2 - std::pow(1.0 - v, 4)) / (v * v);
    }
    return out;
}

}  // namespace wrapxg
