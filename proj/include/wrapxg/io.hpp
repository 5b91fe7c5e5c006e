#pragma once

// Angle-file ingestion and emission.

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "wrapxg/circular.hpp"

namespace wrapxg {

/// Parses an angle listing: one value per line, '#' comments, blank lines
/// skipped, an optional non-numeric first line treated as a header, and
/// single-column CSV (trailing empty fields allowed). Degrees are converted to
/// radians; with double_axial each angle is doubled before normalization.
/// Errors name the offending line number.
[[nodiscard]] CircularSample parse_angles(std::string_view text, AngleUnit unit, bool double_axial,
                                          std::string_view source_name = "<input>");

[[nodiscard]] CircularSample ingest(const std::filesystem::path& path, AngleUnit unit, bool double_axial);

[[nodiscard]] std::string read_file(const std::filesystem::path& path);

/// Radian angles, one per line, at round-trip precision.
void write_angles(const std::filesystem::path& path, const CircularSample& s);
[[nodiscard]] std::string format_angles(const CircularSample& s);

/// FNV-1a 64-bit digest, hex-encoded with an "fnv1a64:" prefix.
[[nodiscard]] std::string content_digest(std::string_view bytes);

struct DatasetCheck {
    bool ok = false;
    std::size_t n = 0;
    std::string message;
};

/// Checks an angle file parses and holds the expected number of observations,
/// with every raw value inside one turn of the stated unit.
[[nodiscard]] DatasetCheck validate_angle_file(const std::filesystem::path& path, AngleUnit unit,
                                               std::size_t expected_n);

}  // namespace wrapxg
