#include "wrapxg/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>
#include <vector>

namespace wrapxg {

namespace {

std::string_view trim(std::string_view s) {
    const auto ws = " \t\r\n\"";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

bool parse_double(std::string_view token, double& out) {
    if (!token.empty() && token.front() == '+') token.remove_prefix(1);
    const auto* first = token.data();
    const auto* last = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last && std::isfinite(out);
}

// Single-column CSV: the first field, with any further fields required empty.
std::optional<std::string_view> single_field(std::string_view line) {
    const auto comma = line.find(',');
    if (comma == std::string_view::npos) return trim(line);
    if (line.substr(comma + 1).find_first_not_of(", \t\r\"") != std::string_view::npos) return std::nullopt;
    return trim(line.substr(0, comma));
}

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        lines.push_back(text.substr(pos, end - pos));
        pos = end + 1;
    }
    return lines;
}

struct RawValues {
    std::vector<double> radians;  // converted, not yet doubled or normalized
    std::vector<double> raw;
};

RawValues parse_raw(std::string_view text, AngleUnit unit, std::string_view source_name) {
    RawValues out;
    bool first_content = true;
    const auto lines = split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const auto t = trim(lines[i]);
        if (t.empty() || t.front() == '#') continue;
        const std::string where = std::string(source_name) + ":" + std::to_string(i + 1);
        const auto field = single_field(t);
        if (!field) throw DataError(where + ": expected a single column, got '" + std::string(t) + "'");
        double v = 0.0;
        const bool numeric = parse_double(*field, v);
        const bool header = first_content && !numeric;
        first_content = false;
        if (header) continue;
        if (!numeric) throw DataError(where + ": non-numeric value '" + std::string(*field) + "'");
        out.raw.push_back(v);
        out.radians.push_back(unit == AngleUnit::Degrees ? v * (std::numbers::pi / 180.0) : v);
    }
    if (out.radians.empty()) throw DataError(std::string(source_name) + ": no angles found");
    return out;
}

}  // namespace

CircularSample parse_angles(std::string_view text, AngleUnit unit, bool double_axial, std::string_view source_name) {
    auto raw = parse_raw(text, unit, source_name);
    for (double& v : raw.radians) v = normalize_angle(double_axial ? 2.0 * v : v);
    return CircularSample(std::move(raw.radians), unit, double_axial);
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

CircularSample ingest(const std::filesystem::path& path, AngleUnit unit, bool double_axial) {
    return parse_angles(read_file(path), unit, double_axial, path.string());
}

std::string format_angles(const CircularSample& s) {
    std::string out;
    char buf[32];
    for (double t : s.angles()) {
        const int len = std::snprintf(buf, sizeof buf, "%.17g\n", t);
        out.append(buf, static_cast<std::size_t>(len));
    }
    return out;
}

void write_angles(const std::filesystem::path& path, const CircularSample& s) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw DataError("cannot write " + path.string());
    out << format_angles(s);
    if (!out) throw DataError("write failed for " + path.string());
}

std::string content_digest(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
    return buf;
}

DatasetCheck validate_angle_file(const std::filesystem::path& path, AngleUnit unit, std::size_t expected_n) {
    DatasetCheck check;
    try {
        const auto raw = parse_raw(read_file(path), unit, path.string());
        check.n = raw.raw.size();
        const double turn = unit == AngleUnit::Degrees ? 360.0 : 2.0 * std::numbers::pi;
        for (std::size_t i = 0; i < raw.raw.size(); ++i) {
            if (raw.raw[i] < 0.0 || raw.raw[i] > turn) {
                check.message = "value " + std::to_string(i + 1) + " outside [0, " + std::to_string(turn) + "]";
                return check;
            }
        }
        if (check.n != expected_n) {
            check.message = "expected " + std::to_string(expected_n) + " observations, found " + std::to_string(check.n);
            return check;
        }
        check.ok = true;
        check.message = "ok";
    } catch (const DataError& e) {
        check.message = e.what();
    }
    return check;
}

}  // namespace wrapxg
