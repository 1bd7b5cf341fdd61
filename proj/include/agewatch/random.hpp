#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace agewatch {

/// xorshift64* generator.
///
/// State update: x ^= x >> 12; x ^= x << 25; x ^= x >> 27; output x * 2685821657736338717.
/// The seed is xor-ed with 0x9E3779B97F4A7C15 to form the initial state (a zero
/// state is replaced by that constant). Uniform doubles take the top 53 bits of
/// the output. All of this is fixed so fixtures can be reproduced bit-for-bit in
/// other languages.
class Xorshift64Star {
public:
    static constexpr std::uint64_t kSeedMix = 0x9E3779B97F4A7C15ULL;

    explicit Xorshift64Star(std::uint64_t seed) : state_(seed ^ kSeedMix) {
        if (state_ == 0) {
            state_ = kSeedMix;
        }
    }

    std::uint64_t next() {
        state_ ^= state_ >> 12;
        state_ ^= state_ << 25;
        state_ ^= state_ >> 27;
        return state_ * 2685821657736338717ULL;
    }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Standard normal via Box-Muller, cosine branch only: two uniforms per draw,
    /// u1 is mapped to (0, 1] so the log is finite.
    double gaussian() {
        const double u1 = 1.0 - uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

private:
    std::uint64_t state_;
};

} // namespace agewatch
