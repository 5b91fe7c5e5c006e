#include "wrapxg/wrapped.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace wrapxg {

namespace {

constexpr double kPi = std::numbers::pi;

// Upper envelope of the linear density's polynomial factor: f(x) = c P(x) e^{-lambda x}.
double poly_factor(LinearModelKind kind, double x, double l) {
    switch (kind) {
        case LinearModelKind::Xgamma: return 1.0 + 0.5 * l * x * x;
        case LinearModelKind::Lindley: return 1.0 + x;
        case LinearModelKind::Exponential: return 1.0;
    }
    return 1.0;
}

double poly_scale(LinearModelKind kind, double l) {
    return kind == LinearModelKind::Exponential ? l : l * l / (1.0 + l);
}

}  // namespace

std::string_view to_string(WrappedModelKind kind) noexcept {
    switch (kind) {
        case WrappedModelKind::WRXG: return "WRXG";
        case WrappedModelKind::WL: return "WL";
        case WrappedModelKind::WE: return "WE";
    }
    return "unknown";
}

std::optional<WrappedModelKind> parse_wrapped_model(std::string_view name) {
    std::string s(name);
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    if (s == "wrxg") return WrappedModelKind::WRXG;
    if (s == "wl") return WrappedModelKind::WL;
    if (s == "we") return WrappedModelKind::WE;
    return std::nullopt;
}

LinearModelKind linear_base(WrappedModelKind kind) noexcept {
    switch (kind) {
        case WrappedModelKind::WRXG: return LinearModelKind::Xgamma;
        case WrappedModelKind::WL: return LinearModelKind::Lindley;
        case WrappedModelKind::WE: return LinearModelKind::Exponential;
    }
    return LinearModelKind::Xgamma;
}

SeriesTruncation truncation_with(WrappedModelKind kind, Rate r, int k_max) {
    if (k_max < 0) throw DomainError("k_max must be >= 0");
    const auto base = linear_base(kind);
    const double l = r.value();
    const double q = std::exp(-kTwoPi * l);
    // For k > k_max and theta in [0, 2pi): f(theta + 2 pi k) <= c P(2 pi (k+1)) q^k.
    // Consecutive envelope ratios decrease in k, so the first omitted ratio
    // bounds a geometric tail.
    const double c = poly_scale(base, l);
    const auto envelope = [&](int k) {
        return c * poly_factor(base, kTwoPi * (k + 1), l) * std::pow(q, k);
    };
    const int first = k_max + 1;
    const double ratio = q * poly_factor(base, kTwoPi * (first + 1), l) / poly_factor(base, kTwoPi * first, l);
    SeriesTruncation t{k_max, std::numeric_limits<double>::infinity()};
    if (ratio < 1.0) t.tail_bound = envelope(first) / (1.0 - ratio);
    return t;
}

SeriesTruncation default_truncation(WrappedModelKind kind, Rate r) {
    const int k_max = static_cast<int>(std::ceil(30.0 / (kTwoPi * r.value()))) + 5;
    return truncation_with(kind, r, k_max);
}

double wrap_pdf_series(WrappedModelKind kind, Angle theta, Rate r, SeriesTruncation trunc) {
    if (trunc.k_max < 0) throw DomainError("k_max must be >= 0");
    const auto base = linear_base(kind);
    double sum = 0.0;
    // Terms decay in k; accumulate smallest first.
    for (int k = trunc.k_max; k >= 0; --k) sum += linear_pdf(base, theta.radians() + kTwoPi * k, r);
    return sum;
}

WrappedDensity::WrappedDensity(WrappedModelKind kind, Rate r) : kind_(kind), rate_(r), lambda_(r.value()) {
    const double l = lambda_;
    q_ = std::exp(-kTwoPi * l);
    one_minus_q_ = -std::expm1(-kTwoPi * l);
    s1_ = q_ / (one_minus_q_ * one_minus_q_);
    s2_ = s1_ * (1.0 + q_) / one_minus_q_;
    if (kind == WrappedModelKind::WE) {
        scale_ = l / one_minus_q_;
        log_scale_ = std::log(l) - std::log(one_minus_q_);
    } else {
        scale_ = l * l / ((1.0 + l) * one_minus_q_);
        log_scale_ = 2.0 * std::log(l) - std::log1p(l) - std::log(one_minus_q_);
    }
}

namespace {

double bracket(WrappedModelKind kind, double t, double l, double q, double s1, double one_minus_q) {
    switch (kind) {
        case WrappedModelKind::WRXG:
            return 1.0 + 0.5 * l * t * t + kTwoPi * l * ((kPi - t) * q + (t + kPi)) * s1;
        case WrappedModelKind::WL: return 1.0 + t + kTwoPi * q / one_minus_q;
        case WrappedModelKind::WE: return 1.0;
    }
    return 1.0;
}

}  // namespace

double WrappedDensity::pdf(double theta) const noexcept {
    return scale_ * std::exp(-lambda_ * theta) * bracket(kind_, theta, lambda_, q_, s1_, one_minus_q_);
}

double WrappedDensity::log_pdf(double theta) const noexcept {
    const double b = bracket(kind_, theta, lambda_, q_, s1_, one_minus_q_);
    return log_scale_ - lambda_ * theta + (kind_ == WrappedModelKind::WE ? 0.0 : std::log(b));
}

double WrappedDensity::cdf(double theta) const noexcept {
    const double l = lambda_;
    const double a = l * theta;
    const double e = std::exp(-a);
    const double one_minus_e = -std::expm1(-a);
    switch (kind_) {
        case WrappedModelKind::WRXG: {
            const double head = one_minus_e - (a + 0.5 * a * a) * e / (1.0 + l);
            const double lin = kTwoPi * l / (1.0 + l) * (one_minus_e - a * e);
            const double quad = 2.0 * kPi * kPi * l * l / (1.0 + l) * one_minus_e;
            return head / one_minus_q_ + lin * s1_ + quad * s2_;
        }
        case WrappedModelKind::WL: {
            const double head = one_minus_e - a * e / (1.0 + l);
            const double lin = kTwoPi * l / (1.0 + l) * one_minus_e;
            return head / one_minus_q_ + lin * s1_;
        }
        case WrappedModelKind::WE: return one_minus_e / one_minus_q_;
    }
    return 0.0;
}

double wrapped_pdf(WrappedModelKind kind, Angle theta, Rate r) {
    return WrappedDensity(kind, r).pdf(theta.radians());
}

double wrapped_cdf(WrappedModelKind kind, Angle theta, Rate r) {
    return WrappedDensity(kind, r).cdf(theta.radians());
}

double wrxg_pdf(Angle theta, Rate r) { return wrapped_pdf(WrappedModelKind::WRXG, theta, r); }
double wrxg_cdf(Angle theta, Rate r) { return wrapped_cdf(WrappedModelKind::WRXG, theta, r); }
double wl_pdf(Angle theta, Rate r) { return wrapped_pdf(WrappedModelKind::WL, theta, r); }
double wl_cdf(Angle theta, Rate r) { return wrapped_cdf(WrappedModelKind::WL, theta, r); }
double we_pdf(Angle theta, Rate r) { return wrapped_pdf(WrappedModelKind::WE, theta, r); }
double we_cdf(Angle theta, Rate r) { return wrapped_cdf(WrappedModelKind::WE, theta, r); }

CircularSample wrapped_sample(WrappedModelKind kind, Rate r, std::size_t n, std::uint64_t seed) {
    if (n == 0) throw DomainError("sample size must be >= 1");
    auto x = linear_sample(linear_base(kind), r, n, seed);
    for (double& v : x) v = normalize_angle(v);
    return CircularSample(std::move(x), AngleUnit::Radians, false);
}

}  // namespace wrapxg
