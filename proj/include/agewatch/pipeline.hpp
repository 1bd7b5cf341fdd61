#pragma once

#include "agewatch/forecast.hpp"
#include "agewatch/metrics.hpp"
#include "agewatch/mlp.hpp"
#include "agewatch/rbf.hpp"
#include "agewatch/synthload.hpp"
#include "agewatch/timeseries.hpp"
#include "agewatch/training.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace agewatch {

/// A series split chronologically, scaled with params fitted on the training
/// prefix only, and the training prefix embedded.
struct PreparedSeries {
    TimeSeries observed;
    std::size_t train_size = 0;
    ScaleParams scale;
    std::vector<double> scaled; // whole series, training-prefix scale
    WindowedDataset train_set;
};

PreparedSeries prepare_series(const TimeSeries& series, std::size_t order_m, std::size_t horizon_n,
                              double train_fraction);

/// Predictions (original units) for every test-segment sample, each from the
/// observed lag window; the first windows reach back into the training prefix.
std::vector<double> holdout_predictions(const WindowPredictor& predict, std::size_t input_dim,
                                        std::size_t horizon_n, const PreparedSeries& prepared);

std::vector<double> test_values(const PreparedSeries& prepared);

/// Default RBF learning rate for a network with `centers` hidden units: the
/// 1/M output factor and the 2 eta / M step shrink the effective per-sample
/// step to eta |Y|^2 / M^2, so eta = M / 2 keeps it at most 1 / 2 * |Y|^2 / M <= 1/2.
double default_rbf_learning_rate(std::size_t centers);

struct BenchmarkConfig {
    AgingProfile profile = reference_benchmark_profile();
    std::size_t order_m = 4;
    std::size_t horizon_n = 1;
    double train_fraction = 0.8;
    std::size_t epochs = 200; // shared budget
    std::size_t max_centers = 1000;
    double sigma_scale = 0.25; // sigma = sigma_scale * mean pairwise center distance
    double rbf_learning_rate = 100.0;
    double mlp_learning_rate = 0.01;
    std::size_t hidden_dim = mlp::kDefaultHiddenDim;
    std::uint64_t seed = 7; // feeds the profile noise and the MLP init
};

/// The frozen configuration `bench` runs, with all randomness from `seed`.
BenchmarkConfig reference_benchmark_config(std::uint64_t seed = 7);

struct BenchmarkResult {
    EvaluationReport mlp;
    EvaluationReport rbf;
    TrainReport mlp_training;
    TrainReport rbf_training;
};

BenchmarkResult run_benchmark(const BenchmarkConfig& config);

/// `model,rmse,mape_percent` with rows MLP then RBFNN.
std::string benchmark_csv(const BenchmarkResult& result);

} // namespace agewatch
