#include "agewatch/synthload.hpp"

#include "agewatch/error.hpp"
#include "agewatch/random.hpp"

#include <json.hpp>

#include <cmath>
#include <numbers>
#include <set>

namespace agewatch {

void validate(const AgingProfile& profile) {
    if (profile.length < 2) {
        throw Error("profile length must be >= 2");
    }
    if (profile.season_period < 2) {
        throw Error("season_period must be >= 2");
    }
    if (!(profile.noise_sigma >= 0.0) || !std::isfinite(profile.noise_sigma)) {
        throw Error("noise_sigma must be finite and >= 0");
    }
    if (!(profile.season_amplitude >= 0.0) || !std::isfinite(profile.season_amplitude)) {
        throw Error("season_amplitude must be finite and >= 0");
    }
    if (!std::isfinite(profile.base) || !std::isfinite(profile.trend_slope)) {
        throw Error("base and trend_slope must be finite");
    }
}

TimeSeries generate_aging_series(const AgingProfile& profile, double start_time, double interval,
                                 std::string name) {
    validate(profile);
    Xorshift64Star rng(profile.seed);

    TimeSeries series;
    series.name = std::move(name);
    series.start_time = start_time;
    series.interval = interval;
    series.values.reserve(profile.length);
    for (std::size_t t = 0; t < profile.length; ++t) {
        const std::size_t age = profile.reset_period > 0 ? t % profile.reset_period : t;
        const double phase = 2.0 * std::numbers::pi * static_cast<double>(t % profile.season_period) /
                             static_cast<double>(profile.season_period);
        const double noise = profile.noise_sigma * rng.gaussian();
        series.values.push_back(profile.base + profile.trend_slope * static_cast<double>(age) +
                                profile.season_amplitude * std::sin(phase) + noise);
    }
    validate(series);
    return series;
}

AgingProfile profile_from_json(std::string_view document) {
    using nlohmann::json;
    json doc;
    try {
        doc = json::parse(document);
    } catch (const json::parse_error& e) {
        throw Error(std::string("profile JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw Error("profile JSON must be an object");
    }
    static const std::set<std::string> fields = {"length",        "base",        "trend_slope",
                                                 "season_amplitude", "season_period", "noise_sigma",
                                                 "reset_period",  "seed"};
    for (const auto& [key, _] : doc.items()) {
        if (!fields.contains(key)) {
            throw Error("profile JSON: unknown field '" + key + "'");
        }
    }
    for (const auto& key : fields) {
        if (!doc.contains(key)) {
            throw Error("profile JSON: missing field '" + key + "'");
        }
    }

    auto unsigned_field = [&](const char* key) -> std::uint64_t {
        const auto& v = doc.at(key);
        if (!v.is_number_unsigned()) {
            throw Error(std::string("profile JSON: '") + key + "' must be a non-negative integer");
        }
        return v.get<std::uint64_t>();
    };
    auto real_field = [&](const char* key) -> double {
        const auto& v = doc.at(key);
        if (!v.is_number()) {
            throw Error(std::string("profile JSON: '") + key + "' must be a number");
        }
        return v.get<double>();
    };

    AgingProfile p;
    p.length = unsigned_field("length");
    p.base = real_field("base");
    p.trend_slope = real_field("trend_slope");
    p.season_amplitude = real_field("season_amplitude");
    p.season_period = unsigned_field("season_period");
    p.noise_sigma = real_field("noise_sigma");
    p.reset_period = unsigned_field("reset_period");
    p.seed = unsigned_field("seed");
    validate(p);
    return p;
}

std::string profile_to_json(const AgingProfile& profile) {
    nlohmann::ordered_json doc;
    doc["length"] = profile.length;
    doc["base"] = profile.base;
    doc["trend_slope"] = profile.trend_slope;
    doc["season_amplitude"] = profile.season_amplitude;
    doc["season_period"] = profile.season_period;
    doc["noise_sigma"] = profile.noise_sigma;
    doc["reset_period"] = profile.reset_period;
    doc["seed"] = profile.seed;
    return doc.dump(2) + "\n";
}

AgingProfile reference_benchmark_profile() {
    AgingProfile p;
    p.length = 480;
    p.base = 200.0;
    p.trend_slope = 3.0;
    p.season_amplitude = 20.0;
    p.season_period = 24;
    p.noise_sigma = 2.0;
    p.reset_period = 48;
    p.seed = 7;
    return p;
}

} // namespace agewatch
