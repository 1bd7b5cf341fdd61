#include "agewatch/rbf.hpp"

#include "agewatch/error.hpp"
#include "agewatch/random.hpp"
#include "model_io.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

namespace agewatch::rbf {

namespace {

void check_input(const RbfNetwork& net, std::span<const double> x) {
    if (x.size() != net.input_dim) {
        throw Error("dimension mismatch: network expects " + std::to_string(net.input_dim) +
                    " inputs, got " + std::to_string(x.size()));
    }
}

void check_target(const RbfNetwork& net, std::span<const double> t) {
    if (t.size() != net.output_dim) {
        throw Error("dimension mismatch: network has " + std::to_string(net.output_dim) +
                    " outputs, target has " + std::to_string(t.size()));
    }
}

void check_dataset(const RbfNetwork& net, const WindowedDataset& dataset) {
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

} // namespace

void validate(const RbfNetwork& net) {
    const std::size_t m = net.center_count();
    if (m < 1 || net.input_dim < 1 || net.output_dim < 1) {
        throw Error("RBF network needs M, input_dim and output_dim >= 1");
    }
    for (const auto& c : net.centers) {
        if (c.size() != net.input_dim) {
            throw Error("center dimension does not match input_dim");
        }
        if (!std::all_of(c.begin(), c.end(), [](double v) { return std::isfinite(v); })) {
            throw Error("non-finite center coordinate");
        }
    }
    if (!(net.sigma > 0.0) || !std::isfinite(net.sigma)) {
        throw Error("sigma must be positive and finite");
    }
    if (net.weights.rows() != m || net.weights.cols() != net.output_dim) {
        throw Error("weight matrix shape must be M x output_dim");
    }
    const auto w = net.weights.flat();
    if (!std::all_of(w.begin(), w.end(), [](double v) { return std::isfinite(v); })) {
        throw Error("non-finite weight");
    }
}

double mean_pairwise_distance(const std::vector<std::vector<double>>& points) {
    if (points.size() < 2) {
        throw Error("mean pairwise distance needs at least 2 centers; give sigma explicitly");
    }
    double total = 0.0;
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            double sq = 0.0;
            for (std::size_t k = 0; k < points[i].size(); ++k) {
                const double d = points[i][k] - points[j][k];
                sq += d * d;
            }
            total += std::sqrt(sq);
            ++pairs;
        }
    }
    return std::max(total / static_cast<double>(pairs), kSigmaFloor);
}

RbfNetwork init_network(const WindowedDataset& dataset, const SigmaPolicy& sigma_policy,
                        std::size_t max_centers, std::size_t output_dim) {
    if (dataset.size() == 0) {
        throw Error("empty dataset");
    }
    if (max_centers < 1) {
        throw Error("max_centers must be >= 1");
    }
    if (output_dim < 1) {
        throw Error("output_dim must be >= 1");
    }

    RbfNetwork net;
    net.input_dim = dataset.input_dim();
    net.output_dim = output_dim;
    std::set<std::vector<double>> seen;
    for (const auto& input : dataset.inputs) {
        if (net.centers.size() == max_centers) {
            break;
        }
        if (input.size() != net.input_dim) {
            throw Error("dataset window has wrong length");
        }
        if (seen.insert(input).second) {
            net.centers.push_back(input);
        }
    }

    if (const auto* explicit_sigma = std::get_if<ExplicitSigma>(&sigma_policy)) {
        net.sigma = explicit_sigma->value;
    } else {
        if (net.centers.size() < 2) {
            throw Error("mean-pairwise sigma is undefined for a single center; give sigma explicitly");
        }
        net.sigma = mean_pairwise_distance(net.centers);
    }
    net.weights = Matrix(net.centers.size(), output_dim, 0.0);
    validate(net);
    return net;
}

double rbf_activation(std::span<const double> x, std::span<const double> center, double sigma) {
    if (x.size() != center.size()) {
        throw Error("dimension mismatch: input has " + std::to_string(x.size()) + " values, center has " +
                    std::to_string(center.size()));
    }
    if (!(sigma > 0.0)) {
        throw Error("sigma must be positive");
    }
    double sq = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double d = x[i] - center[i];
        sq += d * d;
    }
    return std::exp(-sq / (2.0 * sigma * sigma));
}

ForwardPass forward(const RbfNetwork& net, std::span<const double> x) {
    check_input(net, x);
    const std::size_t m_count = net.center_count();
    ForwardPass pass;
    pass.hidden.resize(m_count);
    pass.outputs.assign(net.output_dim, 0.0);
    for (std::size_t m = 0; m < m_count; ++m) {
        pass.hidden[m] = rbf_activation(x, net.centers[m], net.sigma);
    }
    for (std::size_t j = 0; j < net.output_dim; ++j) {
        double sum = 0.0;
        for (std::size_t m = 0; m < m_count; ++m) {
            sum += net.weights(m, j) * pass.hidden[m];
        }
        pass.outputs[j] = sum / static_cast<double>(m_count);
    }
    return pass;
}

double sample_error(const RbfNetwork& net, std::span<const double> x, std::span<const double> target) {
    check_target(net, target);
    const auto pass = forward(net, x);
    double sum = 0.0;
    for (std::size_t j = 0; j < net.output_dim; ++j) {
        const double e = target[j] - pass.outputs[j];
        sum += e * e;
    }
    return sum / static_cast<double>(net.output_dim);
}

double mse(const RbfNetwork& net, const WindowedDataset& dataset) {
    check_dataset(net, dataset);
    double total = 0.0;
    for (std::size_t q = 0; q < dataset.size(); ++q) {
        const double t = dataset.targets[q];
        total += sample_error(net, dataset.inputs[q], std::span<const double>(&t, 1));
    }
    return total / static_cast<double>(dataset.size());
}

Matrix gradient(const RbfNetwork& net, std::span<const double> x, std::span<const double> target) {
    check_target(net, target);
    const auto pass = forward(net, x);
    const std::size_t m_count = net.center_count();
    const double scale = -2.0 / static_cast<double>(net.output_dim * m_count);
    Matrix grad(m_count, net.output_dim);
    for (std::size_t m = 0; m < m_count; ++m) {
        for (std::size_t j = 0; j < net.output_dim; ++j) {
            grad(m, j) = scale * (target[j] - pass.outputs[j]) * pass.hidden[m];
        }
    }
    return grad;
}

TrainReport train(RbfNetwork& net, const WindowedDataset& dataset, const TrainConfig& config) {
    validate(config);
    validate(net);
    check_dataset(net, dataset);

    const std::size_t m_count = net.center_count();
    const double step = 2.0 * config.learning_rate / static_cast<double>(net.output_dim * m_count);

    std::vector<std::size_t> order(dataset.size());
    std::iota(order.begin(), order.end(), 0);
    Xorshift64Star rng(config.seed);

    // Hidden activations depend only on the frozen centers and sigma.
    std::vector<std::vector<double>> hidden(dataset.size());
    for (std::size_t q = 0; q < dataset.size(); ++q) {
        hidden[q] = forward(net, dataset.inputs[q]).hidden;
    }
    auto output = [&](std::size_t q) {
        double sum = 0.0;
        for (std::size_t m = 0; m < m_count; ++m) {
            sum += net.weights(m, 0) * hidden[q][m];
        }
        return sum / static_cast<double>(m_count);
    };

    TrainReport report;
    Matrix delta(m_count, 1);
    for (std::size_t epoch = 1; epoch <= config.epochs; ++epoch) {
        if (config.mode == TrainMode::PerSample) {
            if (config.shuffle) {
                for (std::size_t i = order.size(); i > 1; --i) {
                    std::swap(order[i - 1], order[rng.next() % i]);
                }
            }
            for (const std::size_t q : order) {
                const double err = dataset.targets[q] - output(q);
                for (std::size_t m = 0; m < m_count; ++m) {
                    net.weights(m, 0) += step * (err * hidden[q][m]);
                }
            }
        } else {
            std::fill(delta.flat().begin(), delta.flat().end(), 0.0);
            for (std::size_t q = 0; q < dataset.size(); ++q) {
                const double err = dataset.targets[q] - output(q);
                for (std::size_t m = 0; m < m_count; ++m) {
                    delta(m, 0) += err * hidden[q][m];
                }
            }
            for (std::size_t m = 0; m < m_count; ++m) {
                net.weights(m, 0) += step * delta(m, 0);
            }
        }

        double loss = 0.0;
        for (std::size_t q = 0; q < dataset.size(); ++q) {
            const double e = dataset.targets[q] - output(q);
            loss += e * e;
        }
        loss /= static_cast<double>(dataset.size());
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

WindowPredictor as_predictor(const RbfNetwork& net) {
    if (net.output_dim != 1) {
        throw Error("forecasting needs a single-output network");
    }
    return [&net](std::span<const double> window) { return forward(net, window).outputs[0]; };
}

ForecastResult forecast_recursive(const RbfNetwork& net, std::span<const double> history,
                                  std::size_t steps, std::size_t horizon_n) {
    return forecast_with(as_predictor(net), net.input_dim, history, steps, horizon_n);
}

std::string save_model(const RbfNetwork& net) {
    validate(net);
    std::string out(kModelHeader);
    out += '\n';
    out += "input_dim " + std::to_string(net.input_dim) + '\n';
    out += "output_dim " + std::to_string(net.output_dim) + '\n';
    out += "sigma " + format_double(net.sigma) + '\n';
    out += "M " + std::to_string(net.center_count()) + '\n';
    for (const auto& c : net.centers) {
        detail::append_row(out, c);
    }
    for (std::size_t m = 0; m < net.center_count(); ++m) {
        detail::append_row(out, net.weights.row(m));
    }
    return out;
}

RbfNetwork load_model(std::string_view document) {
    detail::ModelReader reader(document, "agewatch-rbf");
    reader.expect_header(1);
    RbfNetwork net;
    net.input_dim = reader.count("input_dim");
    net.output_dim = reader.count("output_dim");
    net.sigma = reader.scalar("sigma");
    const std::size_t m_count = reader.count("M");
    if (net.input_dim < 1 || net.output_dim < 1 || m_count < 1) {
        reader.fail("dimension inconsistency: input_dim, output_dim and M must be >= 1");
    }
    for (std::size_t m = 0; m < m_count; ++m) {
        net.centers.push_back(reader.row(net.input_dim, "center dimension"));
    }
    net.weights = Matrix(m_count, net.output_dim);
    for (std::size_t m = 0; m < m_count; ++m) {
        const auto row = reader.row(net.output_dim, "weight matrix shape");
        std::copy(row.begin(), row.end(), net.weights.row(m).begin());
    }
    reader.expect_end("weight matrix shape");
    try {
        validate(net);
    } catch (const Error& e) {
        reader.fail(e.what());
    }
    return net;
}

} // namespace agewatch::rbf
