#include "agewatch/mlp.hpp"

#include "agewatch/error.hpp"
#include "agewatch/random.hpp"
#include "model_io.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace agewatch::mlp {

namespace {

bool all_finite(std::span<const double> values) {
    return std::all_of(values.begin(), values.end(), [](double v) { return std::isfinite(v); });
}

struct Trace {
    std::vector<double> hidden; // tanh activations
    std::vector<double> outputs;
};

Trace run(const MlpNetwork& net, std::span<const double> x) {
    if (x.size() != net.input_dim) {
        throw Error("dimension mismatch: network expects " + std::to_string(net.input_dim) +
                    " inputs, got " + std::to_string(x.size()));
    }
    Trace trace;
    trace.hidden.resize(net.hidden_dim);
    for (std::size_t h = 0; h < net.hidden_dim; ++h) {
        double a = net.b1[h];
        for (std::size_t i = 0; i < net.input_dim; ++i) {
            a += net.w1(h, i) * x[i];
        }
        trace.hidden[h] = std::tanh(a);
    }
    trace.outputs.resize(net.output_dim);
    for (std::size_t j = 0; j < net.output_dim; ++j) {
        double z = net.b2[j];
        for (std::size_t h = 0; h < net.hidden_dim; ++h) {
            z += net.w2(j, h) * trace.hidden[h];
        }
        trace.outputs[j] = z;
    }
    return trace;
}

void check_dataset(const MlpNetwork& net, const WindowedDataset& dataset) {
    if (dataset.size() == 0) {
        throw Error("empty dataset");
    }
    if (net.output_dim != 1) {
        throw Error("dataset has scalar targets but network has " + std::to_string(net.output_dim) +
                    " outputs");
    }
    if (dataset.input_dim() != net.input_dim) {
        throw Error("dimension mismatch: dataset windows have " + std::to_string(dataset.input_dim()) +
                    " lags, network expects " + std::to_string(net.input_dim));
    }
}

// params += scale * grad
void apply(MlpNetwork& net, const MlpGradient& grad, double scale) {
    auto axpy = [scale](std::span<double> dst, std::span<const double> src) {
        for (std::size_t i = 0; i < dst.size(); ++i) {
            dst[i] += scale * src[i];
        }
    };
    axpy(net.w1.flat(), grad.w1.flat());
    axpy(net.b1, grad.b1);
    axpy(net.w2.flat(), grad.w2.flat());
    axpy(net.b2, grad.b2);
}

void accumulate(MlpGradient& sum, const MlpGradient& g) {
    auto add = [](std::span<double> dst, std::span<const double> src) {
        for (std::size_t i = 0; i < dst.size(); ++i) {
            dst[i] += src[i];
        }
    };
    add(sum.w1.flat(), g.w1.flat());
    add(sum.b1, g.b1);
    add(sum.w2.flat(), g.w2.flat());
    add(sum.b2, g.b2);
}

} // namespace

void validate(const MlpNetwork& net) {
    if (net.input_dim < 1 || net.hidden_dim < 1 || net.output_dim < 1) {
        throw Error("MLP dimensions must be >= 1");
    }
    if (net.w1.rows() != net.hidden_dim || net.w1.cols() != net.input_dim ||
        net.b1.size() != net.hidden_dim || net.w2.rows() != net.output_dim ||
        net.w2.cols() != net.hidden_dim || net.b2.size() != net.output_dim) {
        throw Error("MLP parameter shapes do not match dimensions");
    }
    if (!all_finite(net.w1.flat()) || !all_finite(net.b1) || !all_finite(net.w2.flat()) ||
        !all_finite(net.b2)) {
        throw Error("non-finite MLP parameter");
    }
}

MlpNetwork init_mlp(std::size_t input_dim, std::size_t hidden_dim, std::size_t output_dim,
                    std::uint64_t seed) {
    if (input_dim < 1 || hidden_dim < 1 || output_dim < 1) {
        throw Error("MLP dimensions must be >= 1");
    }
    Xorshift64Star rng(seed);
    MlpNetwork net;
    net.input_dim = input_dim;
    net.hidden_dim = hidden_dim;
    net.output_dim = output_dim;
    net.w1 = Matrix(hidden_dim, input_dim);
    net.b1.assign(hidden_dim, 0.0);
    net.w2 = Matrix(output_dim, hidden_dim);
    net.b2.assign(output_dim, 0.0);
    const double r1 = 0.5 / std::sqrt(static_cast<double>(input_dim));
    for (auto& w : net.w1.flat()) {
        w = rng.uniform(-r1, r1);
    }
    const double r2 = 0.5 / std::sqrt(static_cast<double>(hidden_dim));
    for (auto& w : net.w2.flat()) {
        w = rng.uniform(-r2, r2);
    }
    return net;
}

std::vector<double> mlp_forward(const MlpNetwork& net, std::span<const double> x) {
    return run(net, x).outputs;
}

MlpGradient mlp_gradient(const MlpNetwork& net, std::span<const double> x, std::span<const double> target) {
    if (target.size() != net.output_dim) {
        throw Error("dimension mismatch: target has " + std::to_string(target.size()) + " values");
    }
    const auto trace = run(net, x);
    const double j_count = static_cast<double>(net.output_dim);

    MlpGradient g{Matrix(net.hidden_dim, net.input_dim), std::vector<double>(net.hidden_dim, 0.0),
                  Matrix(net.output_dim, net.hidden_dim), std::vector<double>(net.output_dim, 0.0)};
    std::vector<double> d_hidden(net.hidden_dim, 0.0);
    for (std::size_t j = 0; j < net.output_dim; ++j) {
        const double d_out = -2.0 / j_count * (target[j] - trace.outputs[j]);
        g.b2[j] = d_out;
        for (std::size_t h = 0; h < net.hidden_dim; ++h) {
            g.w2(j, h) = d_out * trace.hidden[h];
            d_hidden[h] += d_out * net.w2(j, h);
        }
    }
    for (std::size_t h = 0; h < net.hidden_dim; ++h) {
        const double d_pre = d_hidden[h] * (1.0 - trace.hidden[h] * trace.hidden[h]);
        g.b1[h] = d_pre;
        for (std::size_t i = 0; i < net.input_dim; ++i) {
            g.w1(h, i) = d_pre * x[i];
        }
    }
    return g;
}

double mlp_sample_error(const MlpNetwork& net, std::span<const double> x, std::span<const double> target) {
    if (target.size() != net.output_dim) {
        throw Error("dimension mismatch: target has " + std::to_string(target.size()) + " values");
    }
    const auto z = mlp_forward(net, x);
    double sum = 0.0;
    for (std::size_t j = 0; j < z.size(); ++j) {
        const double e = target[j] - z[j];
        sum += e * e;
    }
    return sum / static_cast<double>(net.output_dim);
}

double mlp_mse(const MlpNetwork& net, const WindowedDataset& dataset) {
    check_dataset(net, dataset);
    double total = 0.0;
    for (std::size_t q = 0; q < dataset.size(); ++q) {
        const double t = dataset.targets[q];
        total += mlp_sample_error(net, dataset.inputs[q], std::span<const double>(&t, 1));
    }
    return total / static_cast<double>(dataset.size());
}

TrainReport train_mlp(MlpNetwork& net, const WindowedDataset& dataset, const TrainConfig& config) {
    validate(config);
    validate(net);
    check_dataset(net, dataset);

    std::vector<std::size_t> order(dataset.size());
    std::iota(order.begin(), order.end(), 0);
    Xorshift64Star rng(config.seed);
    const double eta = config.learning_rate;

    TrainReport report;
    for (std::size_t epoch = 1; epoch <= config.epochs; ++epoch) {
        if (config.mode == TrainMode::PerSample) {
            if (config.shuffle) {
                for (std::size_t i = order.size(); i > 1; --i) {
                    std::swap(order[i - 1], order[rng.next() % i]);
                }
            }
            for (const std::size_t q : order) {
                const double t = dataset.targets[q];
                apply(net, mlp_gradient(net, dataset.inputs[q], std::span<const double>(&t, 1)), -eta);
            }
        } else {
            MlpGradient sum{Matrix(net.hidden_dim, net.input_dim), std::vector<double>(net.hidden_dim, 0.0),
                            Matrix(net.output_dim, net.hidden_dim), std::vector<double>(net.output_dim, 0.0)};
            for (std::size_t q = 0; q < dataset.size(); ++q) {
                const double t = dataset.targets[q];
                accumulate(sum, mlp_gradient(net, dataset.inputs[q], std::span<const double>(&t, 1)));
            }
            apply(net, sum, -eta);
        }

        const double loss = mlp_mse(net, dataset);
        if (!std::isfinite(loss) || loss > kDivergenceLimit) {
            throw Error("training diverged at epoch " + std::to_string(epoch) + " (mse " +
                        format_double(loss) + "); lower the learning rate");
        }
        report.mse_history.push_back(loss);
        report.epochs_run = epoch;
        if (loss <= config.target_mse) {
            report.converged = true;
            break;
        }
    }
    return report;
}

WindowPredictor as_predictor(const MlpNetwork& net) {
    if (net.output_dim != 1) {
        throw Error("forecasting needs a single-output network");
    }
    return [&net](std::span<const double> window) { return mlp_forward(net, window)[0]; };
}

std::string save_model(const MlpNetwork& net) {
    validate(net);
    std::string out(kModelHeader);
    out += '\n';
    out += "input_dim " + std::to_string(net.input_dim) + '\n';
    out += "hidden_dim " + std::to_string(net.hidden_dim) + '\n';
    out += "output_dim " + std::to_string(net.output_dim) + '\n';
    for (std::size_t h = 0; h < net.hidden_dim; ++h) {
        detail::append_row(out, net.w1.row(h));
    }
    detail::append_row(out, net.b1);
    for (std::size_t j = 0; j < net.output_dim; ++j) {
        detail::append_row(out, net.w2.row(j));
    }
    detail::append_row(out, net.b2);
    return out;
}

MlpNetwork load_model(std::string_view document) {
    detail::ModelReader reader(document, "agewatch-mlp");
    reader.expect_header(1);
    MlpNetwork net;
    net.input_dim = reader.count("input_dim");
    net.hidden_dim = reader.count("hidden_dim");
    net.output_dim = reader.count("output_dim");
    if (net.input_dim < 1 || net.hidden_dim < 1 || net.output_dim < 1) {
        reader.fail("dimension inconsistency: all dimensions must be >= 1");
    }
    net.w1 = Matrix(net.hidden_dim, net.input_dim);
    for (std::size_t h = 0; h < net.hidden_dim; ++h) {
        const auto row = reader.row(net.input_dim, "hidden weight shape");
        std::copy(row.begin(), row.end(), net.w1.row(h).begin());
    }
    net.b1 = reader.row(net.hidden_dim, "hidden bias shape");
    net.w2 = Matrix(net.output_dim, net.hidden_dim);
    for (std::size_t j = 0; j < net.output_dim; ++j) {
        const auto row = reader.row(net.hidden_dim, "output weight shape");
        std::copy(row.begin(), row.end(), net.w2.row(j).begin());
    }
    net.b2 = reader.row(net.output_dim, "output bias shape");
    reader.expect_end("output bias shape");
    return net;
}

} // namespace agewatch::mlp
