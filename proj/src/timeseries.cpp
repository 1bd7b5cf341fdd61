#include "agewatch/timeseries.hpp"

#include "agewatch/error.hpp"
#include "agewatch/format.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace agewatch {

namespace {

// Splits on LF, dropping one trailing CR per line. A final empty line (the
// document ends with a newline) is not returned.
std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto nl = text.find('\n', pos);
        if (nl == std::string_view::npos) {
            nl = text.size();
        }
        auto line = text.substr(pos, nl - pos);
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        lines.push_back(line);
        pos = nl + 1;
    }
    return lines;
}

std::string at_line(std::size_t line) { return " at line " + std::to_string(line); }

} // namespace

void validate(const TimeSeries& series) {
    if (!(series.interval > 0.0) || !std::isfinite(series.interval)) {
        throw Error("time series '" + series.name + "': interval must be positive");
    }
    if (series.values.empty()) {
        throw Error("time series '" + series.name + "' is empty");
    }
    for (std::size_t i = 0; i < series.values.size(); ++i) {
        if (!std::isfinite(series.values[i])) {
            throw Error("time series '" + series.name + "': non-finite value at index " +
                        std::to_string(i));
        }
    }
}

TimeSeries parse_series_csv(std::string_view text, std::optional<double> interval_override,
                            std::string name) {
    const auto lines = split_lines(text);
    if (lines.empty() || trim(lines[0]).empty()) {
        throw Error("empty document");
    }
    if (trim(lines[0]) != "timestamp,value") {
        throw Error("expected header 'timestamp,value' at line 1");
    }

    std::vector<double> stamps;
    TimeSeries series;
    series.name = std::move(name);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::size_t line_no = i + 1;
        const auto line = lines[i];
        const auto comma = line.find(',');
        if (comma == std::string_view::npos || line.find(',', comma + 1) != std::string_view::npos) {
            throw Error("malformed row" + at_line(line_no));
        }
        const auto stamp = parse_double(trim(line.substr(0, comma)));
        const auto value = parse_double(trim(line.substr(comma + 1)));
        if (!stamp || !value) {
            throw Error("malformed row" + at_line(line_no));
        }
        if (!std::isfinite(*stamp)) {
            throw Error("non-finite timestamp" + at_line(line_no));
        }
        if (!std::isfinite(*value)) {
            throw Error("non-finite value" + at_line(line_no));
        }
        if (!stamps.empty()) {
            const double step = *stamp - stamps.back();
            if (!(step > 0.0)) {
                throw Error("timestamps not strictly increasing" + at_line(line_no));
            }
            if (stamps.size() >= 2) {
                const double first_step = stamps[1] - stamps[0];
                if (std::abs(step - first_step) > 1e-6 * std::abs(first_step)) {
                    throw Error("non-uniform spacing" + at_line(line_no));
                }
            }
        }
        stamps.push_back(*stamp);
        series.values.push_back(*value);
    }
    if (series.values.empty()) {
        throw Error("empty body: no data rows after header");
    }

    series.start_time = stamps.front();
    if (stamps.size() == 1) {
        if (!interval_override) {
            throw Error("single-row series needs an explicit interval");
        }
        series.interval = *interval_override;
    } else {
        series.interval = (stamps.back() - stamps.front()) / static_cast<double>(stamps.size() - 1);
        if (interval_override &&
            std::abs(*interval_override - series.interval) > 1e-6 * series.interval) {
            throw Error("interval override " + format_double(*interval_override) +
                        " disagrees with observed spacing " + format_double(series.interval));
        }
    }
    validate(series);
    return series;
}

std::string write_series_csv(const TimeSeries& series) {
    std::string out = "timestamp,value\n";
    for (std::size_t i = 0; i < series.size(); ++i) {
        out += format_double(series.time_at(i));
        out += ',';
        out += format_double(series.values[i]);
        out += '\n';
    }
    return out;
}

ResourceSample parse_proc_snapshot(std::string_view text, double timestamp) {
    static const std::vector<std::string_view> required = {"MemFree", "SwapTotal", "SwapFree"};
    std::map<std::string_view, double> found;

    const auto lines = split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const auto line = lines[i];
        const auto colon = line.find(':');
        if (colon == std::string_view::npos) {
            continue;
        }
        const auto key = line.substr(0, colon);
        if (std::find(required.begin(), required.end(), key) == required.end()) {
            continue;
        }
        auto rest = trim(line.substr(colon + 1));
        if (rest.size() < 3 || rest.substr(rest.size() - 2) != "kB") {
            throw Error("expected '<integer> kB' for " + std::string(key) + at_line(i + 1));
        }
        rest = trim(rest.substr(0, rest.size() - 2));
        const auto value = parse_integer(rest);
        if (!value || *value < 0) {
            throw Error("malformed value for " + std::string(key) + at_line(i + 1));
        }
        if (!found.emplace(key, static_cast<double>(*value)).second) {
            throw Error("duplicate key " + std::string(key) + at_line(i + 1));
        }
    }
    for (const auto key : required) {
        if (!found.contains(key)) {
            throw Error("missing key " + std::string(key));
        }
    }

    ResourceSample sample;
    sample.timestamp = timestamp;
    sample.free_mem_kb = found["MemFree"];
    sample.swap_used_kb = found["SwapTotal"] - found["SwapFree"];
    if (sample.swap_used_kb < 0.0) {
        throw Error("negative swap usage: SwapFree exceeds SwapTotal");
    }
    return sample;
}

std::pair<TimeSeries, ScaleParams> min_max_scale(const TimeSeries& series) {
    validate(series);
    if (series.size() < 2) {
        throw Error("scaling needs at least 2 samples");
    }
    const auto [lo, hi] = std::minmax_element(series.values.begin(), series.values.end());
    if (!(*hi > *lo)) {
        throw Error("constant series '" + series.name + "' cannot be min-max scaled");
    }
    ScaleParams params{*lo, *hi};
    return {apply_scale(series, params), params};
}

TimeSeries apply_scale(const TimeSeries& series, const ScaleParams& params) {
    if (!(params.max > params.min)) {
        throw Error("scale params require max > min");
    }
    TimeSeries out = series;
    for (auto& v : out.values) {
        v = params.scale(v);
    }
    return out;
}

TimeSeries inverse_scale(const TimeSeries& series, const ScaleParams& params) {
    if (!(params.max > params.min)) {
        throw Error("scale params require max > min");
    }
    TimeSeries out = series;
    for (auto& v : out.values) {
        v = params.unscale(v);
    }
    return out;
}

std::pair<TimeSeries, TimeSeries> split(const TimeSeries& series, double train_fraction) {
    if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
        throw Error("train fraction must lie in (0, 1)");
    }
    const auto total = series.size();
    const auto n_train = static_cast<std::size_t>(std::floor(train_fraction * static_cast<double>(total)));
    if (n_train == 0) {
        throw Error("empty train segment");
    }
    if (n_train >= total) {
        throw Error("empty test segment");
    }
    TimeSeries train = series;
    TimeSeries test = series;
    train.values.assign(series.values.begin(), series.values.begin() + static_cast<std::ptrdiff_t>(n_train));
    test.values.assign(series.values.begin() + static_cast<std::ptrdiff_t>(n_train), series.values.end());
    test.start_time = series.time_at(n_train);
    return {std::move(train), std::move(test)};
}

WindowedDataset embed(std::span<const double> values, std::size_t order_m, std::size_t horizon_n) {
    if (horizon_n < 1) {
        throw Error("horizon must be at least 1");
    }
    const std::size_t needed = order_m + horizon_n + 1;
    if (values.size() < needed) {
        throw Error("series too short: need >= " + std::to_string(needed) + " samples, got " +
                    std::to_string(values.size()));
    }
    WindowedDataset ds;
    ds.order_m = order_m;
    ds.horizon_n = horizon_n;
    const std::size_t count = values.size() - order_m - horizon_n;
    ds.inputs.reserve(count);
    ds.targets.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        auto window = values.subspan(k, order_m + 1);
        ds.inputs.emplace_back(window.begin(), window.end());
        ds.targets.push_back(values[k + order_m + horizon_n]);
    }
    return ds;
}

WindowedDataset embed(const TimeSeries& series, std::size_t order_m, std::size_t horizon_n) {
    return embed(std::span<const double>(series.values), order_m, horizon_n);
}

} // namespace agewatch
