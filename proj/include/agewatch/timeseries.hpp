#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace agewatch {

/// A uniformly sampled scalar aging indicator (response time, swap used, free
/// memory, ...). Sample i is taken at start_time + i * interval.
struct TimeSeries {
    std::string name = "value";
    double start_time = 0.0;
    double interval = 1.0;
    std::vector<double> values;
    std::string unit;

    std::size_t size() const { return values.size(); }
    double time_at(std::size_t index) const {
        return start_time + static_cast<double>(index) * interval;
    }
};

/// Throws Error unless interval > 0, the series is non-empty and every value is finite.
void validate(const TimeSeries& series);

/// Min/max of a min-max scaling transform. Requires max > min.
struct ScaleParams {
    double min = 0.0;
    double max = 1.0;

    double scale(double v) const { return (v - min) / (max - min); }
    double unscale(double v) const { return v * (max - min) + min; }
    bool operator==(const ScaleParams&) const = default;
};

/// Supervised pairs for an n-step predictor of order m. Each input holds
/// m + 1 lags ordered oldest to newest: [x(t-m), ..., x(t)], target x(t+n).
struct WindowedDataset {
    std::size_t order_m = 0;
    std::size_t horizon_n = 1;
    std::vector<std::vector<double>> inputs;
    std::vector<double> targets;

    std::size_t input_dim() const { return order_m + 1; }
    std::size_t size() const { return targets.size(); }
};

struct ResourceSample {
    double timestamp = 0.0;
    double free_mem_kb = 0.0;
    double swap_used_kb = 0.0;
};

/// Parses a `timestamp,value` CSV. Timestamps must be strictly increasing and
/// uniformly spaced (1e-6 relative tolerance). A single-row document needs
/// `interval_override`; with several rows an override must agree with the
/// observed spacing. Errors carry the offending line number.
TimeSeries parse_series_csv(std::string_view text,
                            std::optional<double> interval_override = std::nullopt,
                            std::string name = "value");

/// Inverse of parse_series_csv. Values are written with round-trip precision.
std::string write_series_csv(const TimeSeries& series);

/// Reads MemFree, SwapTotal and SwapFree from a /proc/meminfo style document.
ResourceSample parse_proc_snapshot(std::string_view text, double timestamp);

std::pair<TimeSeries, ScaleParams> min_max_scale(const TimeSeries& series);

/// Scales with externally fitted params (e.g. a test segment with the training
/// segment's params). Results may fall outside [0, 1].
TimeSeries apply_scale(const TimeSeries& series, const ScaleParams& params);

TimeSeries inverse_scale(const TimeSeries& series, const ScaleParams& params);

/// Chronological prefix split: floor(train_fraction * N) samples, then the rest.
std::pair<TimeSeries, TimeSeries> split(const TimeSeries& series, double train_fraction);

/// Pair k: input [x(k), ..., x(k+m)], target x(k+m+n). Yields N - m - n pairs.
WindowedDataset embed(std::span<const double> values, std::size_t order_m, std::size_t horizon_n);
WindowedDataset embed(const TimeSeries& series, std::size_t order_m, std::size_t horizon_n);

} // namespace agewatch
