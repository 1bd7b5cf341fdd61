#pragma once

#include "agewatch/forecast.hpp"
#include "agewatch/timeseries.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace agewatch {

enum class Direction {
    Rising,  // exhausted when value >= threshold (swap used, response time)
    Falling, // exhausted when value <= threshold (free memory)
};

struct ThresholdSpec {
    std::string indicator;
    double threshold = 0.0; // original units
    Direction direction = Direction::Rising;
};

/// A forecast plus what is needed to put it back on the wall clock.
/// `scale` is applied inversely before comparison; leave it empty when the
/// values are already in original units.
struct IndicatorForecast {
    std::string indicator;
    ForecastResult forecast;
    std::optional<ScaleParams> scale;
    double origin_time = 0.0; // timestamp of the last observed sample
    double interval = 1.0;
};

struct IndicatorCrossing {
    std::string indicator;
    double threshold = 0.0;
    Direction direction = Direction::Rising;
    std::optional<std::size_t> first_crossing_step;
    std::optional<double> crossing_time; // origin_time + step * interval
};

struct RejuvenationSchedule {
    std::vector<IndicatorCrossing> crossings; // one per ThresholdSpec, in input order
    std::optional<double> recommended_time;
    std::optional<std::string> binding_indicator;
};

/// First index k whose value is at or beyond the threshold.
std::optional<std::size_t> first_crossing(std::span<const double> values, double threshold,
                                          Direction direction);

/// recommended_time = min over crossing indicators of
///   origin_time + max(k - lead, 0) * interval.
RejuvenationSchedule derive_schedule(std::span<const IndicatorForecast> forecasts,
                                     std::span<const ThresholdSpec> specs, std::size_t lead = 0);

/// `indicator,first_crossing_step,crossing_time` rows ("none" when no crossing
/// within the horizon), then `recommended_time,<time|none>`.
std::string schedule_to_csv(const RejuvenationSchedule& schedule);

std::optional<Direction> parse_direction(std::string_view text);

} // namespace agewatch
