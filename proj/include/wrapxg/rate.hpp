#pragma once

#include <cmath>
#include <string>

#include "wrapxg/errors.hpp"

namespace wrapxg {

/// Strictly positive, finite rate parameter shared by every model family.
/// All parameter validation happens here; downstream code assumes a valid Rate.
class Rate {
public:
    explicit Rate(double lambda) : lambda_(lambda) {
        if (!std::isfinite(lambda) || lambda <= 0.0) {
            throw DomainError("rate must be finite and > 0, got " + std::to_string(lambda));
        }
    }

    [[nodiscard]] double value() const noexcept { return lambda_; }

    friend bool operator==(Rate, Rate) = default;

private:
    double lambda_;
};

}  // namespace wrapxg
