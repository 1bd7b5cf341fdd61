#pragma once

#include "agewatch/timeseries.hpp"

#include <cstdint>
#include <string>

namespace agewatch {

/// Shape of a synthetic aging indicator:
///   value(t) = base + trend_slope * (t mod reset_period)
///            + season_amplitude * sin(2 pi t / season_period)
///            + N(0, noise_sigma)
/// reset_period == 0 disables the reset (pure accumulation).
struct AgingProfile {
    std::size_t length = 2;
    double base = 0.0;
    double trend_slope = 0.0;
    double season_amplitude = 0.0;
    std::size_t season_period = 2;
    double noise_sigma = 0.0;
    std::size_t reset_period = 0;
    std::uint64_t seed = 0;

    bool operator==(const AgingProfile&) const = default;
};

void validate(const AgingProfile& profile);

/// Deterministic: equal profiles give bit-identical series. Noise comes from
/// Xorshift64Star + Box-Muller (see random.hpp), one gaussian per sample.
TimeSeries generate_aging_series(const AgingProfile& profile, double start_time = 0.0,
                                 double interval = 1.0, std::string name = "value");

/// JSON document with exactly the AgingProfile field names. Unknown or
/// missing fields are rejected.
AgingProfile profile_from_json(std::string_view document);
std::string profile_to_json(const AgingProfile& profile);

/// Frozen benchmark used by `bench`: a swap-usage-like indicator that grows
/// stepwise and is reclaimed every 48 samples, on top of a 24-sample workload
/// cycle and measurement noise.
AgingProfile reference_benchmark_profile();

} // namespace agewatch
