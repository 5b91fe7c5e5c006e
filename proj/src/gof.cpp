#include "wrapxg/gof.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace wrapxg {

namespace {

std::vector<double> sorted_copy(std::span<const double> u) {
    if (u.empty()) throw DataError("goodness-of-fit statistic on an empty sample");
    std::vector<double> v(u.begin(), u.end());
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

double kolmogorov_pvalue(double x) {
    if (!(x > 0.0)) return 1.0;
    double p;
    if (x < 0.3) {
        // Small-x form: P(K <= x) = sqrt(2 pi)/x sum_k exp(-(2k-1)^2 pi^2 / (8 x^2)).
        const double pi2 = std::numbers::pi * std::numbers::pi;
        double cdf = 0.0;
        for (int k = 1; k <= 100; ++k) {
            const double m = 2.0 * k - 1.0;
            const double term = std::exp(-m * m * pi2 / (8.0 * x * x));
            cdf += term;
            if (term < 1e-300) break;
        }
        p = 1.0 - std::sqrt(2.0 * std::numbers::pi) / x * cdf;
    } else {
        double sum = 0.0;
        for (int k = 1; k <= 100; ++k) {
            const double term = std::exp(-2.0 * k * k * x * x);
            sum += (k % 2 == 1) ? term : -term;
        }
        p = 2.0 * sum;
    }
    return std::clamp(p, 0.0, 1.0);
}

KsResult ks_test(std::span<const double> u) {
    const auto v = sorted_copy(u);
    const double n = static_cast<double>(v.size());
    double d = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const double hi = (i + 1.0) / n - v[i];
        const double lo = v[i] - i / n;
        d = std::max({d, hi, lo});
    }
    return {d, kolmogorov_pvalue(std::sqrt(n) * d)};
}

double cvm_stat(std::span<const double> u) {
    const auto v = sorted_copy(u);
    const double n = static_cast<double>(v.size());
    double w = 1.0 / (12.0 * n);
    for (std::size_t i = 0; i < v.size(); ++i) {
        const double e = (2.0 * i + 1.0) / (2.0 * n) - v[i];
        w += e * e;
    }
    return w;
}

double ad_stat(std::span<const double> u) {
    const auto v = sorted_copy(u);
    const std::size_t n = v.size();
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double lo = v[i];
        const double hi = v[n - 1 - i];
        if (lo <= 0.0 || lo >= 1.0 || hi <= 0.0 || hi >= 1.0) {
            throw DataError("Anderson-Darling statistic undefined: model CDF is 0 or 1 at a sample point");
        }
        sum += (2.0 * i + 1.0) * (std::log(lo) + std::log1p(-hi));
    }
    const double nd = static_cast<double>(n);
    return -nd - sum / nd;
}

double watson_u2(std::span<const double> u) {
    const double w = cvm_stat(u);
    const double n = static_cast<double>(u.size());
    double mean = 0.0;
    for (double x : u) mean += x;
    mean /= n;
    return w - n * (mean - 0.5) * (mean - 0.5);
}

std::vector<double> probability_transform(const CircularSample& s, const WrappedDensity& model) {
    std::vector<double> u;
    u.reserve(s.size());
    for (double t : s.angles()) u.push_back(model.cdf(t));
    return u;
}

KsResult ks_test(const CircularSample& s, const WrappedDensity& model) {
    return ks_test(probability_transform(s, model));
}
double cvm_stat(const CircularSample& s, const WrappedDensity& model) {
    return cvm_stat(probability_transform(s, model));
}
double ad_stat(const CircularSample& s, const WrappedDensity& model) {
    return ad_stat(probability_transform(s, model));
}
double watson_u2(const CircularSample& s, const WrappedDensity& model) {
    return watson_u2(probability_transform(s, model));
}

GofReport gof_report(WrappedModelKind kind, const CircularSample& s, const FitResult& fit) {
    if (fit.model != kind) throw DomainError("fit was computed for a different model");
    if (fit.n != s.size()) throw DomainError("fit was computed on a sample of different size");
    const WrappedDensity model(kind, fit.lambda_hat);
    const auto u = probability_transform(s, model);
    GofReport r;
    r.model = kind;
    r.n = s.size();
    const auto ks = ks_test(u);
    r.ks_statistic = ks.statistic;
    r.ks_p_value = ks.p_value;
    r.cvm = cvm_stat(u);
    try {
        r.anderson_darling = ad_stat(u);
    } catch (const DataError&) {
        r.anderson_darling = std::numeric_limits<double>::quiet_NaN();
    }
    r.watson = watson_u2(u);
    return r;
}

}  // namespace wrapxg
