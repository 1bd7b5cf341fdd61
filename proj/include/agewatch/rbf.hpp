#pragma once

#include "agewatch/forecast.hpp"
#include "agewatch/matrix.hpp"
#include "agewatch/timeseries.hpp"
#include "agewatch/training.hpp"

#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace agewatch::rbf {

/// Gaussian RBF network. Hidden unit m responds with
///   Y_m = exp(-|X - C_m|^2 / (2 sigma^2))
/// and output j is Z_j = (1/M) sum_m weights(m, j) * Y_m. There are no
/// input->hidden weights; centers and sigma stay fixed during training.
struct RbfNetwork {
    std::vector<std::vector<double>> centers; // M x input_dim
    double sigma = 1.0;
    Matrix weights; // M x output_dim
    std::size_t input_dim = 0;
    std::size_t output_dim = 0;

    std::size_t center_count() const { return centers.size(); }
    bool operator==(const RbfNetwork&) const = default;
};

/// Throws Error if the network breaks its shape/finiteness invariants.
void validate(const RbfNetwork& net);

struct ExplicitSigma {
    double value;
};
/// Average Euclidean distance over all center pairs, floored at 1e-6.
struct MeanPairwiseSigma {};
using SigmaPolicy = std::variant<ExplicitSigma, MeanPairwiseSigma>;

inline constexpr double kSigmaFloor = 1e-6;

/// Centers are the first min(Q', max_centers) distinct training inputs in
/// dataset order (Q' = number of distinct inputs). Weights start at zero.
RbfNetwork init_network(const WindowedDataset& dataset, const SigmaPolicy& sigma_policy,
                        std::size_t max_centers, std::size_t output_dim = 1);

double mean_pairwise_distance(const std::vector<std::vector<double>>& points);

double rbf_activation(std::span<const double> x, std::span<const double> center, double sigma);

struct ForwardPass {
    std::vector<double> outputs; // Z, length J
    std::vector<double> hidden;  // Y, length M
};

ForwardPass forward(const RbfNetwork& net, std::span<const double> x);

/// Per-sample loss (1/J) sum_j (t_j - Z_j)^2.
double sample_error(const RbfNetwork& net, std::span<const double> x, std::span<const double> target);

/// Mean of sample_error over the dataset (scalar targets, so J must be 1).
double mse(const RbfNetwork& net, const WindowedDataset& dataset);

/// dE/dweights(m, j) = -(2 / (J M)) (t_j - Z_j) Y_m for the per-sample loss.
Matrix gradient(const RbfNetwork& net, std::span<const double> x, std::span<const double> target);

/// Steepest descent on the hidden->output weights only. Per-sample mode
/// applies weights += (2 eta / (J M)) (t_j - Z_j) Y_m after each exemplar;
/// batch mode sums that increment over all exemplars (with weights held
/// fixed) and applies it once per epoch. Throws Error on divergence.
TrainReport train(RbfNetwork& net, const WindowedDataset& dataset, const TrainConfig& config);

/// Single-output network as a window predictor.
WindowPredictor as_predictor(const RbfNetwork& net);

ForecastResult forecast_recursive(const RbfNetwork& net, std::span<const double> history,
                                  std::size_t steps, std::size_t horizon_n);

/// Text model document, first line `agewatch-rbf v1`.
std::string save_model(const RbfNetwork& net);
RbfNetwork load_model(std::string_view document);

inline constexpr std::string_view kModelHeader = "agewatch-rbf v1";

} // namespace agewatch::rbf
