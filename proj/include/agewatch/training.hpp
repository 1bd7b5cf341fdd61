#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace agewatch {

enum class TrainMode {
    PerSample, // update after every exemplar, in dataset order
    Batch,     // accumulate over all exemplars, one update per epoch
};

struct TrainConfig {
    double learning_rate = 0.1;
    std::size_t epochs = 100;
    TrainMode mode = TrainMode::PerSample;
    double target_mse = 0.0; // stop once the epoch MSE is <= this
    bool shuffle = false;    // per-sample mode only; order drawn from `seed`
    std::uint64_t seed = 0;
};

void validate(const TrainConfig& config);

struct TrainReport {
    std::size_t epochs_run = 0;
    std::vector<double> mse_history; // dataset MSE after each epoch
    bool converged = false;
};

/// Training aborts once the dataset MSE exceeds this (or is non-finite).
inline constexpr double kDivergenceLimit = 1e12;

} // namespace agewatch
