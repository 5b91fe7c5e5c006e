#pragma once

// Columnar data for external renderers: histogram, rose diagram, fitted
// density curves and empirical CDF overlays.

#include <span>
#include <string>
#include <vector>

#include "wrapxg/circular.hpp"
#include "wrapxg/estimate.hpp"

namespace wrapxg {

inline constexpr std::size_t kRoseSectors = 16;

struct Histogram {
    std::vector<double> edges;      // bins + 1 values from 0 to 2pi
    std::vector<double> densities;  // count / (n * width)
};

struct RoseDiagram {
    std::vector<double> edges;
    std::vector<std::size_t> counts;
};

struct ModelCurve {
    WrappedModelKind model;
    double lambda;
    std::vector<double> values;
};

struct PlotData {
    std::size_t n = 0;
    Histogram histogram;
    RoseDiagram rose;
    /// Half-open grid theta_j = 2 pi j / points.
    std::vector<double> curve_theta;
    std::vector<ModelCurve> pdf_curves;
    /// Sorted sample angles, ECDF heights i/n, and each model CDF at those angles.
    std::vector<double> ecdf_theta;
    std::vector<double> ecdf;
    std::vector<ModelCurve> cdf_overlays;
};

[[nodiscard]] Histogram linear_histogram(const CircularSample& s, std::size_t bins);
[[nodiscard]] RoseDiagram rose_diagram(const CircularSample& s, std::size_t sectors = kRoseSectors);

[[nodiscard]] PlotData make_plot_data(const CircularSample& s, std::span<const FitResult> fits, std::size_t bins,
                                      std::size_t curve_points);

}  // namespace wrapxg
