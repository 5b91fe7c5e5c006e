#include "wrapxg/plotdata.hpp"

#include <algorithm>
#include <cmath>

namespace wrapxg {

namespace {

std::vector<double> uniform_edges(std::size_t count) {
    std::vector<double> e(count + 1);
    for (std::size_t i = 0; i <= count; ++i) e[i] = kTwoPi * static_cast<double>(i) / static_cast<double>(count);
    return e;
}

std::vector<std::size_t> bin_counts(const CircularSample& s, std::size_t count) {
    std::vector<std::size_t> c(count, 0);
    const double width = kTwoPi / static_cast<double>(count);
    for (double t : s.angles()) {
        auto k = static_cast<std::size_t>(t / width);
        c[std::min(k, count - 1)] += 1;
    }
    return c;
}

}  // namespace

Histogram linear_histogram(const CircularSample& s, std::size_t bins) {
    if (bins == 0) throw DomainError("histogram needs at least one bin");
    Histogram h;
    h.edges = uniform_edges(bins);
    const auto counts = bin_counts(s, bins);
    const double n = static_cast<double>(s.size());
    for (std::size_t i = 0; i < bins; ++i) {
        h.densities.push_back(static_cast<double>(counts[i]) / (n * (h.edges[i + 1] - h.edges[i])));
    }
    return h;
}

RoseDiagram rose_diagram(const CircularSample& s, std::size_t sectors) {
    if (sectors == 0) throw DomainError("rose diagram needs at least one sector");
    return {uniform_edges(sectors), bin_counts(s, sectors)};
}

PlotData make_plot_data(const CircularSample& s, std::span<const FitResult> fits, std::size_t bins,
                        std::size_t curve_points) {
    if (curve_points < 2) throw DomainError("curve needs at least 2 points");
    PlotData p;
    p.n = s.size();
    p.histogram = linear_histogram(s, bins);
    p.rose = rose_diagram(s);
    for (std::size_t j = 0; j < curve_points; ++j) {
        p.curve_theta.push_back(kTwoPi * static_cast<double>(j) / static_cast<double>(curve_points));
    }
    p.ecdf_theta.assign(s.angles().begin(), s.angles().end());
    std::sort(p.ecdf_theta.begin(), p.ecdf_theta.end());
    for (std::size_t i = 0; i < p.ecdf_theta.size(); ++i) {
        p.ecdf.push_back(static_cast<double>(i + 1) / static_cast<double>(p.n));
    }
    for (const auto& fit : fits) {
        const WrappedDensity g(fit.model, fit.lambda_hat);
        ModelCurve pdf{fit.model, fit.lambda_hat.value(), {}};
        for (double t : p.curve_theta) pdf.values.push_back(g.pdf(t));
        ModelCurve cdf{fit.model, fit.lambda_hat.value(), {}};
        for (double t : p.ecdf_theta) cdf.values.push_back(g.cdf(t));
        p.pdf_curves.push_back(std::move(pdf));
        p.cdf_overlays.push_back(std::move(cdf));
    }
    return p;
}

}  // namespace wrapxg
