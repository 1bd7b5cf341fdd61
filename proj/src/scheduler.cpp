#include "agewatch/scheduler.hpp"

#include "agewatch/error.hpp"
#include "agewatch/format.hpp"

#include <algorithm>
#include <cmath>

namespace agewatch {

std::optional<std::size_t> first_crossing(std::span<const double> values, double threshold,
                                          Direction direction) {
    for (std::size_t k = 0; k < values.size(); ++k) {
        const bool crossed = direction == Direction::Rising ? values[k] >= threshold : values[k] <= threshold;
        if (crossed) {
            return k;
        }
    }
    return std::nullopt;
}

RejuvenationSchedule derive_schedule(std::span<const IndicatorForecast> forecasts,
                                     std::span<const ThresholdSpec> specs, std::size_t lead) {
    RejuvenationSchedule schedule;
    for (const auto& spec : specs) {
        if (!std::isfinite(spec.threshold)) {
            throw Error("threshold for '" + spec.indicator + "' must be finite");
        }
        const auto it = std::find_if(forecasts.begin(), forecasts.end(),
                                     [&](const IndicatorForecast& f) { return f.indicator == spec.indicator; });
        if (it == forecasts.end()) {
            throw Error("threshold references unknown indicator '" + spec.indicator + "'");
        }
        if (!(it->interval > 0.0)) {
            throw Error("forecast '" + it->indicator + "' needs a positive interval");
        }

        std::vector<double> values = it->forecast.values;
        if (it->scale) {
            if (!(it->scale->max > it->scale->min)) {
                throw Error("scale params require max > min");
            }
            for (auto& v : values) {
                v = it->scale->unscale(v);
            }
        }

        IndicatorCrossing crossing;
        crossing.indicator = spec.indicator;
        crossing.threshold = spec.threshold;
        crossing.direction = spec.direction;
        crossing.first_crossing_step = first_crossing(values, spec.threshold, spec.direction);
        if (crossing.first_crossing_step) {
            const auto k = *crossing.first_crossing_step;
            crossing.crossing_time = it->origin_time + static_cast<double>(k) * it->interval;
            const std::size_t led = k > lead ? k - lead : 0;
            const double when = it->origin_time + static_cast<double>(led) * it->interval;
            if (!schedule.recommended_time || when < *schedule.recommended_time) {
                schedule.recommended_time = when;
                schedule.binding_indicator = spec.indicator;
            }
        }
        schedule.crossings.push_back(std::move(crossing));
    }
    return schedule;
}

std::string schedule_to_csv(const RejuvenationSchedule& schedule) {
    std::string out = "indicator,first_crossing_step,crossing_time\n";
    for (const auto& c : schedule.crossings) {
        out += c.indicator;
        out += ',';
        out += c.first_crossing_step ? std::to_string(*c.first_crossing_step) : "none";
        out += ',';
        out += c.crossing_time ? format_double(*c.crossing_time) : "none";
        out += '\n';
    }
    out += "recommended_time,";
    out += schedule.recommended_time ? format_double(*schedule.recommended_time) : "none";
    out += '\n';
    return out;
}

std::optional<Direction> parse_direction(std::string_view text) {
    if (text == "rising") {
        return Direction::Rising;
    }
    if (text == "falling") {
        return Direction::Falling;
    }
    return std::nullopt;
}

} // namespace agewatch
