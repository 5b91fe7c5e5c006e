#pragma once

#include <numbers>
#include <span>
#include <string_view>
#include <vector>

#include "wrapxg/errors.hpp"

namespace wrapxg {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Maps any finite real to [0, 2pi). An exact 2pi (or a value that rounds to
/// it after reduction) maps to 0.
[[nodiscard]] double normalize_angle(double theta);

/// Direction on the unit circle, held in radians in [0, 2pi).
class Angle {
public:
    Angle() = default;
    /// Normalizes; throws DomainError on non-finite input.
    explicit Angle(double radians);

    [[nodiscard]] double radians() const noexcept { return theta_; }

    friend bool operator==(Angle, Angle) = default;

private:
    double theta_ = 0.0;
};

enum class AngleUnit { Degrees, Radians };

[[nodiscard]] std::string_view to_string(AngleUnit unit) noexcept;

/// Ordered angles together with how they were obtained. Immutable once built.
class CircularSample {
public:
    /// Angles must already be normalized; throws DataError if empty or out of range.
    CircularSample(std::vector<double> radians, AngleUnit source_unit, bool axial_doubled);

    /// Normalizes arbitrary finite radian values.
    static CircularSample from_radians(std::span<const double> values);

    [[nodiscard]] std::span<const double> angles() const noexcept { return angles_; }
    [[nodiscard]] std::size_t size() const noexcept { return angles_.size(); }
    [[nodiscard]] AngleUnit source_unit() const noexcept { return unit_; }
    [[nodiscard]] bool axial_doubled() const noexcept { return axial_; }

    /// Copy with every angle shifted by delta (mod 2pi); provenance preserved.
    [[nodiscard]] CircularSample rotated(double delta) const;

private:
    std::vector<double> angles_;
    AngleUnit unit_;
    bool axial_;
};

}  // namespace wrapxg
