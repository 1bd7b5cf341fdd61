#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace agewatch {

struct ForecastResult {
    std::vector<double> values; // scaled domain
    std::size_t horizon_steps = 0;
    std::size_t origin_index = 0; // index of the last observed sample used
};

using WindowPredictor = std::function<double(std::span<const double>)>;

/// Multi-step forecast from a one-output window predictor trained for horizon
/// `horizon_n`. The prediction for time T+k (T = last observed) is made from
/// the window ending at T+k-n; any entry past T is a previous prediction.
/// With n == 1 this is plain recursive forecasting.
///
/// `history` must hold at least input_dim + horizon_n - 1 values; only the
/// tail is used. `origin_index` defaults to history.size() - 1.
ForecastResult forecast_with(const WindowPredictor& predict, std::size_t input_dim,
                             std::span<const double> history, std::size_t steps,
                             std::size_t horizon_n, std::size_t origin_index);
ForecastResult forecast_with(const WindowPredictor& predict, std::size_t input_dim,
                             std::span<const double> history, std::size_t steps,
                             std::size_t horizon_n);

/// Predictions for every sample of `values` from index `first` on, each made
/// from the observed window ending horizon_n samples earlier.
std::vector<double> predict_observed(const WindowPredictor& predict, std::size_t input_dim,
                                     std::size_t horizon_n, std::span<const double> values,
                                     std::size_t first);

} // namespace agewatch
