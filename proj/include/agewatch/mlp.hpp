#pragma once

#include "agewatch/forecast.hpp"
#include "agewatch/matrix.hpp"
#include "agewatch/timeseries.hpp"
#include "agewatch/training.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace agewatch::mlp {

// Baseline perceptron: Z = W2 tanh(W1 x + b1) + b2.
struct MlpNetwork {
    std::size_t input_dim = 0;
    std::size_t hidden_dim = 0;
    std::size_t output_dim = 0;
    Matrix w1; // hidden_dim x input_dim
    std::vector<double> b1;
    Matrix w2; // output_dim x hidden_dim
    std::vector<double> b2;

    bool operator==(const MlpNetwork&) const = default;
};

inline constexpr std::size_t kDefaultHiddenDim = 8;

void validate(const MlpNetwork& net);

/// Weights uniform in +-0.5/sqrt(fan_in) from Xorshift64Star(seed); biases 0.
MlpNetwork init_mlp(std::size_t input_dim, std::size_t hidden_dim, std::size_t output_dim,
                    std::uint64_t seed);

std::vector<double> mlp_forward(const MlpNetwork& net, std::span<const double> x);

struct MlpGradient {
    Matrix w1;
    std::vector<double> b1;
    Matrix w2;
    std::vector<double> b2;
};

/// Backprop gradient of the per-sample loss (1/J) sum_j (t_j - Z_j)^2.
MlpGradient mlp_gradient(const MlpNetwork& net, std::span<const double> x, std::span<const double> target);

double mlp_sample_error(const MlpNetwork& net, std::span<const double> x, std::span<const double> target);
double mlp_mse(const MlpNetwork& net, const WindowedDataset& dataset);

/// Plain gradient descent with the same TrainConfig contract as rbf::train:
/// per-sample steps in dataset order, or one step per epoch with the
/// gradient summed over all exemplars.
TrainReport train_mlp(MlpNetwork& net, const WindowedDataset& dataset, const TrainConfig& config);

WindowPredictor as_predictor(const MlpNetwork& net);

inline constexpr std::string_view kModelHeader = "agewatch-mlp v1";

std::string save_model(const MlpNetwork& net);
MlpNetwork load_model(std::string_view document);

} // namespace agewatch::mlp
