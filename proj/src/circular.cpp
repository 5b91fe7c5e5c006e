#include "wrapxg/circular.hpp"

#include <cmath>
#include <string>

namespace wrapxg {

double normalize_angle(double theta) {
    if (!std::isfinite(theta)) throw DomainError("angle must be finite");
    double t = std::fmod(theta, kTwoPi);
    if (t < 0.0) t += kTwoPi;
    if (t >= kTwoPi) t = 0.0;
    return t;
}

Angle::Angle(double radians) : theta_(normalize_angle(radians)) {}

std::string_view to_string(AngleUnit unit) noexcept {
    return unit == AngleUnit::Degrees ? "degrees" : "radians";
}

CircularSample::CircularSample(std::vector<double> radians, AngleUnit source_unit, bool axial_doubled)
    : angles_(std::move(radians)), unit_(source_unit), axial_(axial_doubled) {
    if (angles_.empty()) throw DataError("circular sample is empty");
    for (std::size_t i = 0; i < angles_.size(); ++i) {
        const double t = angles_[i];
        if (!std::isfinite(t) || t < 0.0 || t >= kTwoPi) {
            throw DataError("angle " + std::to_string(i) + " is not normalized to [0, 2pi)");
        }
    }
}

CircularSample CircularSample::from_radians(std::span<const double> values) {
    std::vector<double> v;
    v.reserve(values.size());
    for (double x : values) v.push_back(normalize_angle(x));
    return CircularSample(std::move(v), AngleUnit::Radians, false);
}

CircularSample CircularSample::rotated(double delta) const {
    std::vector<double> v;
    v.reserve(angles_.size());
    for (double x : angles_) v.push_back(normalize_angle(x + delta));
    return CircularSample(std::move(v), unit_, axial_);
}

}  // namespace wrapxg
