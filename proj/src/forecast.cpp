#include "agewatch/forecast.hpp"

#include "agewatch/error.hpp"

#include <string>

namespace agewatch {

ForecastResult forecast_with(const WindowPredictor& predict, std::size_t input_dim,
                             std::span<const double> history, std::size_t steps,
                             std::size_t horizon_n, std::size_t origin_index) {
    if (steps < 1) {
        throw Error("forecast needs at least 1 step");
    }
    if (horizon_n < 1) {
        throw Error("horizon must be at least 1");
    }
    if (input_dim < 1) {
        throw Error("input dimension must be at least 1");
    }
    const std::size_t needed = input_dim + horizon_n - 1;
    if (history.size() < needed) {
        throw Error("dimension mismatch: forecasting needs " + std::to_string(needed) +
                    " history values, got " + std::to_string(history.size()));
    }

    // Observed tail followed by predictions; index `observed - 1` is time T.
    std::vector<double> buffer(history.end() - static_cast<std::ptrdiff_t>(needed), history.end());
    const std::size_t observed = buffer.size();
    buffer.reserve(observed + steps);

    ForecastResult result;
    result.horizon_steps = steps;
    result.origin_index = origin_index;
    result.values.reserve(steps);
    for (std::size_t k = 1; k <= steps; ++k) {
        // Window ends at T + k - n.
        const std::size_t end = observed - 1 + k - horizon_n;
        const std::span<const double> window(buffer.data() + end + 1 - input_dim, input_dim);
        const double next = predict(window);
        result.values.push_back(next);
        buffer.push_back(next);
    }
    return result;
}

ForecastResult forecast_with(const WindowPredictor& predict, std::size_t input_dim,
                             std::span<const double> history, std::size_t steps,
                             std::size_t horizon_n) {
    const std::size_t origin = history.empty() ? 0 : history.size() - 1;
    return forecast_with(predict, input_dim, history, steps, horizon_n, origin);
}

std::vector<double> predict_observed(const WindowPredictor& predict, std::size_t input_dim,
                                     std::size_t horizon_n, std::span<const double> values,
                                     std::size_t first) {
    if (input_dim < 1 || horizon_n < 1) {
        throw Error("input dimension and horizon must be at least 1");
    }
    const std::size_t lag_span = input_dim - 1 + horizon_n;
    if (first < lag_span) {
        throw Error("not enough observed lags before index " + std::to_string(first) + ": need " +
                    std::to_string(lag_span));
    }
    std::vector<double> out;
    for (std::size_t i = first; i < values.size(); ++i) {
        const std::size_t start = i - lag_span;
        out.push_back(predict(values.subspan(start, input_dim)));
    }
    return out;
}

} // namespace agewatch
