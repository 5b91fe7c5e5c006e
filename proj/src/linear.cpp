#include "wrapxg/linear.hpp"

#include <cmath>
#include <string>

#include "wrapxg/random.hpp"

namespace wrapxg {

namespace {

void check_support(double x) {
    if (!std::isfinite(x) && !(std::isinf(x) && x > 0)) {
        throw DomainError("linear density argument must be a real number");
    }
    if (x < 0.0) throw DomainError("linear density argument must be >= 0, got " + std::to_string(x));
}

double lindley_pdf(double x, double l) { return l * l / (1.0 + l) * (1.0 + x) * std::exp(-l * x); }

double lindley_cdf(double x, double l) {
    // 1 - (1 + l + l x)/(1 + l) e^{-lx} = (1 - e^{-lx}) - l x e^{-lx}/(1 + l)
    const double a = l * x;
    return -std::expm1(-a) - a * std::exp(-a) / (1.0 + l);
}

double exponential_pdf(double x, double l) { return l * std::exp(-l * x); }
double exponential_cdf(double x, double l) { return -std::expm1(-l * x); }

}  // namespace

std::string_view to_string(LinearModelKind kind) noexcept {
    switch (kind) {
        case LinearModelKind::Xgamma: return "xgamma";
        case LinearModelKind::Lindley: return "lindley";
        case LinearModelKind::Exponential: return "exponential";
    }
    return "unknown";
}

double xg_pdf(double x, Rate r) {
    check_support(x);
    if (std::isinf(x)) return 0.0;
    const double l = r.value();
    return l * l / (1.0 + l) * (1.0 + 0.5 * l * x * x) * std::exp(-l * x);
}

double xg_cdf(double x, Rate r) {
    check_support(x);
    if (std::isinf(x)) return 1.0;
    const double l = r.value();
    const double a = l * x;
    // (1 - e^{-a}) - (a + a^2/2) e^{-a} / (1 + l)
    return -std::expm1(-a) - (a + 0.5 * a * a) * std::exp(-a) / (1.0 + l);
}

std::complex<double> xg_cf(double t, Rate r) {
    if (!std::isfinite(t)) throw DomainError("characteristic function argument must be finite");
    const double l = r.value();
    const std::complex<double> numerator(l * l + l - t * t, -2.0 * t * l);
    const std::complex<double> base(l, -t);
    return (l * l / (1.0 + l)) * numerator / (base * base * base);
}

MixtureWeights mixture_weights(LinearModelKind kind, Rate r) noexcept {
    const double l = r.value();
    switch (kind) {
        case LinearModelKind::Xgamma: return {l / (1.0 + l), 1.0 / (1.0 + l), 3};
        case LinearModelKind::Lindley: return {l / (1.0 + l), 1.0 / (1.0 + l), 2};
        case LinearModelKind::Exponential: return {1.0, 0.0, 0};
    }
    return {1.0, 0.0, 0};
}

std::vector<double> linear_sample(LinearModelKind kind, Rate r, std::size_t n, std::uint64_t seed) {
    const auto w = mixture_weights(kind, r);
    const double l = r.value();
    Rng rng(seed);
    std::vector<double> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (w.gamma_shape == 0 || rng.uniform() < w.exponential) {
            out.push_back(rng.exponential(l));
        } else {
            out.push_back(rng.erlang(w.gamma_shape, l));
        }
    }
    return out;
}

std::vector<double> xg_sample(Rate r, std::size_t n, std::uint64_t seed) {
    return linear_sample(LinearModelKind::Xgamma, r, n, seed);
}

double linear_pdf(LinearModelKind kind, double x, Rate r) {
    switch (kind) {
        case LinearModelKind::Xgamma: return xg_pdf(x, r);
        case LinearModelKind::Lindley:
            check_support(x);
            return std::isinf(x) ? 0.0 : lindley_pdf(x, r.value());
        case LinearModelKind::Exponential:
            check_support(x);
            return std::isinf(x) ? 0.0 : exponential_pdf(x, r.value());
    }
    return 0.0;
}

double linear_cdf(LinearModelKind kind, double x, Rate r) {
    switch (kind) {
        case LinearModelKind::Xgamma: return xg_cdf(x, r);
        case LinearModelKind::Lindley:
            check_support(x);
            return std::isinf(x) ? 1.0 : lindley_cdf(x, r.value());
        case LinearModelKind::Exponential:
            check_support(x);
            return std::isinf(x) ? 1.0 : exponential_cdf(x, r.value());
    }
    return 0.0;
}

}  // namespace wrapxg
