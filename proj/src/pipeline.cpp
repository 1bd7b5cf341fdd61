#include "agewatch/pipeline.hpp"

#include "agewatch/error.hpp"
#include "agewatch/format.hpp"

#include <algorithm>

namespace agewatch {

PreparedSeries prepare_series(const TimeSeries& series, std::size_t order_m, std::size_t horizon_n,
                              double train_fraction) {
    validate(series);
    auto [train, test] = split(series, train_fraction);
    PreparedSeries prepared;
    prepared.observed = series;
    prepared.train_size = train.size();
    if (train.size() < order_m + horizon_n + 1) {
        throw Error("training segment too short: need >= " + std::to_string(order_m + horizon_n + 1) +
                    " samples, got " + std::to_string(train.size()));
    }
    auto [scaled_train, params] = min_max_scale(train);
    prepared.scale = params;
    prepared.scaled = apply_scale(series, params).values;
    prepared.train_set = embed(scaled_train, order_m, horizon_n);
    return prepared;
}

std::vector<double> holdout_predictions(const WindowPredictor& predict, std::size_t input_dim,
                                        std::size_t horizon_n, const PreparedSeries& prepared) {
    auto out = predict_observed(predict, input_dim, horizon_n, prepared.scaled, prepared.train_size);
    for (auto& v : out) {
        v = prepared.scale.unscale(v);
    }
    return out;
}

std::vector<double> test_values(const PreparedSeries& prepared) {
    const auto& v = prepared.observed.values;
    return {v.begin() + static_cast<std::ptrdiff_t>(prepared.train_size), v.end()};
}

double default_rbf_learning_rate(std::size_t centers) {
    return 0.5 * static_cast<double>(centers);
}

BenchmarkConfig reference_benchmark_config(std::uint64_t seed) {
    BenchmarkConfig config;
    config.seed = seed;
    config.profile.seed = seed;
    return config;
}

BenchmarkResult run_benchmark(const BenchmarkConfig& config) {
    const auto series = generate_aging_series(config.profile, 0.0, 1.0, "benchmark");
    const auto prepared = prepare_series(series, config.order_m, config.horizon_n, config.train_fraction);
    const auto target = test_values(prepared);
    const std::size_t d = config.order_m + 1;

    BenchmarkResult result;

    auto rbf_net = rbf::init_network(prepared.train_set, rbf::MeanPairwiseSigma{}, config.max_centers);
    if (!(config.sigma_scale > 0.0)) {
        throw Error("sigma_scale must be positive");
    }
    rbf_net.sigma = std::max(config.sigma_scale * rbf_net.sigma, rbf::kSigmaFloor);
    TrainConfig rbf_config;
    rbf_config.epochs = config.epochs;
    rbf_config.learning_rate = config.rbf_learning_rate > 0.0 ? config.rbf_learning_rate
                                                              : default_rbf_learning_rate(rbf_net.center_count());
    result.rbf_training = rbf::train(rbf_net, prepared.train_set, rbf_config);
    result.rbf = evaluate("RBFNN", holdout_predictions(rbf::as_predictor(rbf_net), d, config.horizon_n, prepared),
                          target);

    auto mlp_net = mlp::init_mlp(d, config.hidden_dim, 1, config.seed);
    TrainConfig mlp_config;
    mlp_config.epochs = config.epochs;
    mlp_config.learning_rate = config.mlp_learning_rate;
    result.mlp_training = mlp::train_mlp(mlp_net, prepared.train_set, mlp_config);
    result.mlp = evaluate("MLP", holdout_predictions(mlp::as_predictor(mlp_net), d, config.horizon_n, prepared),
                          target);
    return result;
}

std::string benchmark_csv(const BenchmarkResult& result) {
    std::string out = "model,rmse,mape_percent\n";
    for (const auto* r : {&result.mlp, &result.rbf}) {
        out += r->indicator + ',' + format_double(r->rmse) + ',' + format_double(r->mape_percent) + '\n';
    }
    return out;
}

} // namespace agewatch
