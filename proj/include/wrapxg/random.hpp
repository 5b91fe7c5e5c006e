#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace wrapxg {

/// SplitMix64 finalizer. Used to derive independent stream seeds from
/// (master, cell, replicate) counters.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b = 0) noexcept {
    return splitmix64(splitmix64(splitmix64(master) ^ a) ^ (b * 0xD1B54A32D192ED03ULL + 1));
}

/// Per-call generator. mt19937_64 output is fixed by the standard, and the
/// uniform/exponential transforms are done here rather than through
/// <random> distributions, so draws are identical across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on the open interval (0, 1).
    double uniform() noexcept {
        return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
    }

    /// Exponential with the given rate.
    double exponential(double rate) noexcept { return -std::log(uniform()) / rate; }

    /// Gamma with integer shape, as a sum of exponentials.
    double erlang(int shape, double rate) noexcept {
        double s = 0.0;
        for (int i = 0; i < shape; ++i) s += exponential(rate);
        return s;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace wrapxg
