#include "cli.hpp"

#include "agewatch/error.hpp"
#include "agewatch/format.hpp"
#include "agewatch/metrics.hpp"
#include "agewatch/mlp.hpp"
#include "agewatch/pipeline.hpp"
#include "agewatch/rbf.hpp"
#include "agewatch/scheduler.hpp"
#include "agewatch/synthload.hpp"
#include "agewatch/timeseries.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <variant>

namespace agewatch::cli {

namespace {

constexpr std::string_view kRunFormat = "agewatch-run v1";

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open '" + path + "' for reading");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw Error("cannot open '" + path + "' for writing");
    }
    out << text;
    if (!out.flush()) {
        throw Error("failed writing '" + path + "'");
    }
}

std::string stem_of(const std::string& path) {
    return std::filesystem::path(path).stem().string();
}

TimeSeries load_series(const std::string& path, std::optional<double> interval, const std::string& name) {
    try {
        return parse_series_csv(read_text(path), interval, name);
    } catch (const Error& e) {
        throw Error(path + ": " + e.what());
    }
}

std::optional<double> optional_interval(double value) {
    return value > 0.0 ? std::optional<double>(value) : std::nullopt;
}

// Everything a trained model needs to be reapplied to a series.
struct RunMeta {
    std::string kind = "rbf";
    std::string indicator = "value";
    std::size_t order_m = 4;
    std::size_t horizon_n = 1;
    double train_fraction = 0.8;
    ScaleParams scale;
    std::size_t epochs_run = 0;
    bool converged = false;
};

std::string meta_to_json(const RunMeta& meta) {
    nlohmann::ordered_json doc;
    doc["format"] = kRunFormat;
    doc["kind"] = meta.kind;
    doc["indicator"] = meta.indicator;
    doc["order_m"] = meta.order_m;
    doc["horizon_n"] = meta.horizon_n;
    doc["train_fraction"] = meta.train_fraction;
    doc["scale"] = {{"min", meta.scale.min}, {"max", meta.scale.max}};
    doc["epochs_run"] = meta.epochs_run;
    doc["converged"] = meta.converged;
    return doc.dump(2) + "\n";
}

RunMeta meta_from_json(const std::string& text, const std::string& path) {
    try {
        const auto doc = nlohmann::json::parse(text);
        if (doc.at("format").get<std::string>() != kRunFormat) {
            throw Error("unsupported run metadata format");
        }
        RunMeta meta;
        meta.kind = doc.at("kind").get<std::string>();
        meta.indicator = doc.at("indicator").get<std::string>();
        meta.order_m = doc.at("order_m").get<std::size_t>();
        meta.horizon_n = doc.at("horizon_n").get<std::size_t>();
        meta.train_fraction = doc.at("train_fraction").get<double>();
        meta.scale.min = doc.at("scale").at("min").get<double>();
        meta.scale.max = doc.at("scale").at("max").get<double>();
        meta.epochs_run = doc.at("epochs_run").get<std::size_t>();
        meta.converged = doc.at("converged").get<bool>();
        if (!(meta.scale.max > meta.scale.min)) {
            throw Error("scale requires max > min");
        }
        return meta;
    } catch (const nlohmann::json::exception& e) {
        throw Error(path + ": malformed run metadata: " + e.what());
    } catch (const Error& e) {
        throw Error(path + ": " + e.what());
    }
}

// A loaded model of either kind, usable as a window predictor.
class LoadedModel {
public:
    explicit LoadedModel(const std::string& document) {
        if (document.starts_with("agewatch-mlp")) {
            model_ = mlp::load_model(document);
        } else {
            model_ = rbf::load_model(document);
        }
    }

    std::string kind() const { return std::holds_alternative<rbf::RbfNetwork>(model_) ? "rbf" : "mlp"; }

    std::size_t input_dim() const {
        return std::visit([](const auto& net) { return net.input_dim; }, model_);
    }

    WindowPredictor predictor() const {
        return std::visit([](const auto& net) -> WindowPredictor {
            using T = std::decay_t<decltype(net)>;
            if constexpr (std::is_same_v<T, rbf::RbfNetwork>) {
                return rbf::as_predictor(net);
            } else {
                return mlp::as_predictor(net);
            }
        }, model_);
    }

private:
    std::variant<rbf::RbfNetwork, mlp::MlpNetwork> model_;
};

struct ModelBundle {
    std::unique_ptr<LoadedModel> model;
    RunMeta meta;
};

ModelBundle load_bundle(const std::string& model_path, std::string meta_path) {
    if (meta_path.empty()) {
        meta_path = model_path + ".json";
    }
    ModelBundle bundle;
    try {
        bundle.model = std::make_unique<LoadedModel>(read_text(model_path));
    } catch (const Error& e) {
        throw Error(model_path + ": " + e.what());
    }
    bundle.meta = meta_from_json(read_text(meta_path), meta_path);
    if (bundle.model->kind() != bundle.meta.kind || bundle.model->input_dim() != bundle.meta.order_m + 1) {
        throw Error(meta_path + ": metadata does not match model " + model_path);
    }
    return bundle;
}

TrainMode parse_mode(const std::string& text) {
    if (text == "per-sample") {
        return TrainMode::PerSample;
    }
    if (text == "batch") {
        return TrainMode::Batch;
    }
    throw UsageError("--mode must be 'per-sample' or 'batch'");
}

// ---------------------------------------------------------------- generate

struct GenerateOptions {
    std::string profile_path;
    std::string out;
    std::string name = "value";
    double start = 0.0;
    double interval = 1.0;
    std::size_t length = 0;
    double base = 0.0;
    double slope = 0.0;
    double amplitude = 0.0;
    std::size_t period = 0;
    double noise = 0.0;
    std::size_t reset = 0;
    std::uint64_t seed = 0;
};

void setup_generate(CLI::App& app, GenerateOptions& o) {
    app.add_option("--profile", o.profile_path, "AgingProfile JSON document (defaults to the benchmark profile)")
        ->check(CLI::ExistingFile);
    app.add_option("--out", o.out, "Output series CSV")->required();
    app.add_option("--name", o.name, "Indicator label")->capture_default_str();
    app.add_option("--start", o.start, "Timestamp of the first sample")->capture_default_str();
    app.add_option("--interval", o.interval, "Seconds between samples")->capture_default_str();
    app.add_option("--length", o.length, "Override: sample count (>= 2)");
    app.add_option("--base", o.base, "Override: baseline level");
    app.add_option("--slope", o.slope, "Override: per-step aging drift");
    app.add_option("--amplitude", o.amplitude, "Override: seasonal amplitude (>= 0)");
    app.add_option("--period", o.period, "Override: seasonal period in samples (>= 2)");
    app.add_option("--noise", o.noise, "Override: gaussian noise sigma (>= 0)");
    app.add_option("--reset", o.reset, "Override: reset period in samples (0 = never)");
    app.add_option("--seed", o.seed, "Override: noise seed");
}

void run_generate(const CLI::App& app, const GenerateOptions& o) {
    AgingProfile profile = o.profile_path.empty() ? reference_benchmark_profile()
                                                  : profile_from_json(read_text(o.profile_path));
    if (app.count("--length")) profile.length = o.length;
    if (app.count("--base")) profile.base = o.base;
    if (app.count("--slope")) profile.trend_slope = o.slope;
    if (app.count("--amplitude")) profile.season_amplitude = o.amplitude;
    if (app.count("--period")) profile.season_period = o.period;
    if (app.count("--noise")) profile.noise_sigma = o.noise;
    if (app.count("--reset")) profile.reset_period = o.reset;
    if (app.count("--seed")) profile.seed = o.seed;
    if (!(o.interval > 0.0)) {
        throw UsageError("--interval must be positive");
    }
    const auto series = generate_aging_series(profile, o.start, o.interval, o.name);
    write_text(o.out, write_series_csv(series));
}

// ---------------------------------------------------------------- train

struct TrainOptions {
    std::string input;
    std::string model;
    std::string meta;
    std::string report;
    std::string name;
    std::string kind = "rbf";
    std::size_t order = 4;
    std::size_t horizon = 1;
    double train_fraction = 0.8;
    std::string lr = "auto";
    std::size_t epochs = 200;
    std::string mode = "per-sample";
    double target_mse = 0.0;
    bool shuffle = false;
    std::uint64_t seed = 0;
    std::string sigma = "auto";
    double sigma_scale = 1.0;
    std::size_t max_centers = 1000;
    std::size_t hidden = mlp::kDefaultHiddenDim;
    double interval = 0.0;
};

void setup_train(CLI::App& app, TrainOptions& o) {
    app.add_option("--input", o.input, "Series CSV (timestamp,value)")->required()->check(CLI::ExistingFile);
    app.add_option("--model", o.model, "Output model document")->required();
    app.add_option("--meta", o.meta, "Output run metadata JSON (default: <model>.json)");
    app.add_option("--report", o.report, "Output training report CSV (epoch,mse)");
    app.add_option("--name", o.name, "Indicator label (default: input file stem)");
    app.add_option("--kind", o.kind, "Model kind")->check(CLI::IsMember({"rbf", "mlp"}))->capture_default_str();
    app.add_option("--order,-m", o.order, "Embedding order m (lags beyond x(t))")->capture_default_str();
    app.add_option("--horizon,-n", o.horizon, "Forecast horizon n (>= 1)")->capture_default_str();
    app.add_option("--train-fraction", o.train_fraction, "Chronological training prefix fraction in (0,1)")
        ->capture_default_str();
    app.add_option("--lr", o.lr, "Learning rate, or 'auto' (rbf: M/2, mlp: 0.01)")->capture_default_str();
    app.add_option("--epochs", o.epochs, "Epoch budget")->capture_default_str();
    app.add_option("--mode", o.mode, "per-sample or batch")->capture_default_str();
    app.add_option("--target-mse", o.target_mse, "Early-stop MSE threshold (scaled domain)")->capture_default_str();
    app.add_flag("--shuffle", o.shuffle, "Shuffle exemplar order each epoch (per-sample mode)");
    app.add_option("--seed", o.seed, "Seed for shuffling and MLP initialisation")->capture_default_str();
    app.add_option("--sigma", o.sigma, "RBF width, or 'auto' for the mean pairwise center distance")
        ->capture_default_str();
    app.add_option("--sigma-scale", o.sigma_scale, "Multiplier applied to the 'auto' RBF width")
        ->capture_default_str();
    app.add_option("--max-centers", o.max_centers, "RBF center cap")->capture_default_str();
    app.add_option("--hidden", o.hidden, "MLP hidden units")->capture_default_str();
    app.add_option("--interval", o.interval, "Sample interval for single-row input");
}

void run_train(const TrainOptions& o) {
    if (o.horizon < 1) {
        throw UsageError("--horizon must be >= 1");
    }
    TrainConfig config;
    config.epochs = o.epochs;
    config.mode = parse_mode(o.mode);
    config.target_mse = o.target_mse;
    config.shuffle = o.shuffle;
    config.seed = o.seed;
    std::optional<double> lr;
    if (o.lr != "auto") {
        lr = parse_double(o.lr);
        if (!lr) {
            throw UsageError("--lr must be a number or 'auto'");
        }
    }

    const std::string name = o.name.empty() ? stem_of(o.input) : o.name;
    const auto series = load_series(o.input, optional_interval(o.interval), name);
    const auto prepared = prepare_series(series, o.order, o.horizon, o.train_fraction);

    RunMeta meta;
    meta.kind = o.kind;
    meta.indicator = name;
    meta.order_m = o.order;
    meta.horizon_n = o.horizon;
    meta.train_fraction = o.train_fraction;
    meta.scale = prepared.scale;

    TrainReport report;
    std::string model_text;
    if (o.kind == "rbf") {
        rbf::SigmaPolicy policy = rbf::MeanPairwiseSigma{};
        if (o.sigma != "auto") {
            const auto value = parse_double(o.sigma);
            if (!value || !(*value > 0.0)) {
                throw UsageError("--sigma must be a positive number or 'auto'");
            }
            policy = rbf::ExplicitSigma{*value};
        }
        auto net = rbf::init_network(prepared.train_set, policy, o.max_centers);
        if (o.sigma == "auto") {
            if (!(o.sigma_scale > 0.0)) {
                throw UsageError("--sigma-scale must be positive");
            }
            net.sigma = std::max(net.sigma * o.sigma_scale, rbf::kSigmaFloor);
        }
        config.learning_rate = lr.value_or(default_rbf_learning_rate(net.center_count()));
        report = rbf::train(net, prepared.train_set, config);
        model_text = rbf::save_model(net);
    } else {
        auto net = mlp::init_mlp(o.order + 1, o.hidden, 1, o.seed);
        config.learning_rate = lr.value_or(0.01);
        report = mlp::train_mlp(net, prepared.train_set, config);
        model_text = mlp::save_model(net);
    }
    meta.epochs_run = report.epochs_run;
    meta.converged = report.converged;

    write_text(o.model, model_text);
    write_text(o.meta.empty() ? o.model + ".json" : o.meta, meta_to_json(meta));
    if (!o.report.empty()) {
        std::string csv = "epoch,mse\n";
        for (std::size_t e = 0; e < report.mse_history.size(); ++e) {
            csv += std::to_string(e + 1) + ',' + format_double(report.mse_history[e]) + '\n';
        }
        write_text(o.report, csv);
    }
}

// ---------------------------------------------------------------- forecast

struct ForecastOptions {
    std::string model;
    std::string meta;
    std::string input;
    std::string out;
    std::size_t steps = 1;
    double interval = 0.0;
};

void setup_forecast(CLI::App& app, ForecastOptions& o) {
    app.add_option("--model", o.model, "Model document from `train`")->required()->check(CLI::ExistingFile);
    app.add_option("--meta", o.meta, "Run metadata JSON (default: <model>.json)");
    app.add_option("--input", o.input, "Observed series CSV; forecasting starts after its last sample")
        ->required()
        ->check(CLI::ExistingFile);
    app.add_option("--steps", o.steps, "Number of future samples")->capture_default_str();
    app.add_option("--out", o.out, "Output forecast CSV (timestamp,value) in original units")->required();
    app.add_option("--interval", o.interval, "Sample interval for single-row input");
}

void run_forecast(const ForecastOptions& o) {
    if (o.steps < 1) {
        throw UsageError("--steps must be >= 1");
    }
    const auto bundle = load_bundle(o.model, o.meta);
    const auto series = load_series(o.input, optional_interval(o.interval), bundle.meta.indicator);
    const auto scaled = apply_scale(series, bundle.meta.scale);
    const auto result = forecast_with(bundle.model->predictor(), bundle.model->input_dim(), scaled.values,
                                      o.steps, bundle.meta.horizon_n, series.size() - 1);
    TimeSeries out;
    out.name = series.name;
    out.interval = series.interval;
    out.start_time = series.time_at(series.size());
    for (const double v : result.values) {
        out.values.push_back(bundle.meta.scale.unscale(v));
    }
    write_text(o.out, write_series_csv(out));
}

// ---------------------------------------------------------------- plotdata

struct PlotOptions {
    std::string model;
    std::string meta;
    std::string input;
    std::string out;
};

void setup_plotdata(CLI::App& app, PlotOptions& o) {
    app.add_option("--model", o.model, "Model document from `train`")->required()->check(CLI::ExistingFile);
    app.add_option("--meta", o.meta, "Run metadata JSON (default: <model>.json)");
    app.add_option("--input", o.input, "The series the model was trained on")->required()->check(CLI::ExistingFile);
    app.add_option("--out", o.out, "Output CSV (timestamp,observed,predicted) over the test segment")->required();
}

void run_plotdata(const PlotOptions& o) {
    const auto bundle = load_bundle(o.model, o.meta);
    const auto series = load_series(o.input, std::nullopt, bundle.meta.indicator);
    const auto [train, test] = split(series, bundle.meta.train_fraction);
    PreparedSeries prepared;
    prepared.observed = series;
    prepared.train_size = train.size();
    prepared.scale = bundle.meta.scale;
    prepared.scaled = apply_scale(series, bundle.meta.scale).values;
    const auto predicted =
        holdout_predictions(bundle.model->predictor(), bundle.model->input_dim(), bundle.meta.horizon_n, prepared);

    std::string csv = "timestamp,observed,predicted\n";
    for (std::size_t k = 0; k < predicted.size(); ++k) {
        const std::size_t i = prepared.train_size + k;
        csv += format_double(series.time_at(i)) + ',' + format_double(series.values[i]) + ',' +
               format_double(predicted[k]) + '\n';
    }
    write_text(o.out, csv);
}

// ---------------------------------------------------------------- evaluate

struct EvaluateOptions {
    std::string predicted;
    std::string target;
    std::string plotdata;
    std::string indicator;
    std::string out;
    double interval = 0.0;
};

void setup_evaluate(CLI::App& app, EvaluateOptions& o) {
    app.add_option("--predicted", o.predicted, "Forecast series CSV (original units)")->check(CLI::ExistingFile);
    app.add_option("--target", o.target, "Observed series CSV of the same length")->check(CLI::ExistingFile);
    app.add_option("--plotdata", o.plotdata, "Alternatively, a `plotdata` CSV (timestamp,observed,predicted)")
        ->check(CLI::ExistingFile);
    app.add_option("--indicator", o.indicator, "Indicator label for the report (default: target file stem)");
    app.add_option("--out", o.out, "Output report CSV (indicator,rmse,mape_percent,n_samples)")->required();
    app.add_option("--interval", o.interval, "Sample interval for single-row inputs");
    app.footer("Metrics are computed on values exactly as given; pass original (unscaled) units.");
}

// Observed/predicted columns of a plotdata document.
std::pair<std::vector<double>, std::vector<double>> read_plotdata(const std::string& path) {
    std::istringstream in(read_text(path));
    std::string line;
    std::vector<double> observed;
    std::vector<double> predicted;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line_no == 1) {
            if (line != "timestamp,observed,predicted") {
                throw Error(path + ": expected header 'timestamp,observed,predicted'");
            }
            continue;
        }
        const auto c1 = line.find(',');
        const auto c2 = c1 == std::string::npos ? c1 : line.find(',', c1 + 1);
        if (c2 == std::string::npos) {
            throw Error(path + ": malformed row at line " + std::to_string(line_no));
        }
        const auto obs = parse_double(std::string_view(line).substr(c1 + 1, c2 - c1 - 1));
        const auto pred = parse_double(std::string_view(line).substr(c2 + 1));
        if (!obs || !pred) {
            throw Error(path + ": malformed row at line " + std::to_string(line_no));
        }
        observed.push_back(*obs);
        predicted.push_back(*pred);
    }
    if (line_no == 0) {
        throw Error(path + ": empty document");
    }
    return {observed, predicted};
}

void run_evaluate(const EvaluateOptions& o) {
    std::vector<double> predicted;
    std::vector<double> target;
    std::string indicator = o.indicator;
    if (!o.plotdata.empty()) {
        if (!o.predicted.empty() || !o.target.empty()) {
            throw UsageError("use either --plotdata or --predicted/--target, not both");
        }
        std::tie(target, predicted) = read_plotdata(o.plotdata);
        if (indicator.empty()) {
            indicator = stem_of(o.plotdata);
        }
    } else {
        if (o.predicted.empty() || o.target.empty()) {
            throw UsageError("evaluate needs --predicted and --target (or --plotdata)");
        }
        predicted = load_series(o.predicted, optional_interval(o.interval), "predicted").values;
        target = load_series(o.target, optional_interval(o.interval), "target").values;
        if (indicator.empty()) {
            indicator = stem_of(o.target);
        }
    }
    const auto report = evaluate(indicator, predicted, target);
    write_text(o.out, std::string(kReportCsvHeader) + '\n' + to_csv_row(report) + '\n');
}

// ---------------------------------------------------------------- schedule

struct ScheduleOptions {
    std::vector<std::string> forecasts;
    std::vector<std::string> thresholds;
    std::size_t lead = 0;
    double interval = 0.0;
    std::string out;
};

void setup_schedule(CLI::App& app, ScheduleOptions& o) {
    app.add_option("--forecast", o.forecasts, "NAME=PATH of a `forecast` CSV (original units); repeatable")
        ->required();
    app.add_option("--threshold", o.thresholds, "NAME:rising|falling:VALUE exhaustion threshold; repeatable")
        ->required();
    app.add_option("--lead", o.lead, "Safety lead in samples")->capture_default_str();
    app.add_option("--interval", o.interval, "Sample interval for single-row forecasts");
    app.add_option("--out", o.out, "Output schedule CSV")->required();
}

void run_schedule(const ScheduleOptions& o) {
    std::vector<IndicatorForecast> forecasts;
    for (const auto& item : o.forecasts) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == item.size()) {
            throw UsageError("--forecast expects NAME=PATH, got '" + item + "'");
        }
        const std::string name = item.substr(0, eq);
        const auto series = load_series(item.substr(eq + 1), optional_interval(o.interval), name);
        IndicatorForecast f;
        f.indicator = name;
        f.forecast.values = series.values;
        f.forecast.horizon_steps = series.size();
        f.origin_time = series.start_time - series.interval;
        f.interval = series.interval;
        forecasts.push_back(std::move(f));
    }
    std::vector<ThresholdSpec> specs;
    for (const auto& item : o.thresholds) {
        const auto c1 = item.find(':');
        const auto c2 = c1 == std::string::npos ? c1 : item.find(':', c1 + 1);
        if (c2 == std::string::npos) {
            throw UsageError("--threshold expects NAME:DIRECTION:VALUE, got '" + item + "'");
        }
        const auto direction = parse_direction(item.substr(c1 + 1, c2 - c1 - 1));
        const auto value = parse_double(std::string_view(item).substr(c2 + 1));
        if (!direction || !value) {
            throw UsageError("bad --threshold '" + item + "'");
        }
        specs.push_back({item.substr(0, c1), *value, *direction});
    }
    write_text(o.out, schedule_to_csv(derive_schedule(forecasts, specs, o.lead)));
}

// ---------------------------------------------------------------- bench

struct BenchOptions {
    std::uint64_t seed = 7;
    std::string out;
    std::size_t epochs = 0;
};

void setup_bench(CLI::App& app, BenchOptions& o) {
    app.add_option("--seed", o.seed, "Seed for the benchmark series and MLP initialisation")->capture_default_str();
    app.add_option("--epochs", o.epochs, "Override the shared epoch budget");
    app.add_option("--out", o.out, "Output CSV (model,rmse,mape_percent)")->required();
}

void run_bench(const CLI::App& app, const BenchOptions& o) {
    auto config = reference_benchmark_config(o.seed);
    if (app.count("--epochs")) {
        config.epochs = o.epochs;
    }
    write_text(o.out, benchmark_csv(run_benchmark(config)));
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"agewatch: forecast software-aging indicators with an RBF network and derive a "
                 "rejuvenation schedule"};
    app.name("agewatch");
    app.require_subcommand(1);

    GenerateOptions gen;
    TrainOptions tr;
    ForecastOptions fc;
    EvaluateOptions ev;
    ScheduleOptions sc;
    BenchOptions bn;
    PlotOptions pl;
    auto* generate = app.add_subcommand("generate", "Write a synthetic aging-indicator series");
    auto* train = app.add_subcommand("train", "Train a model on the training prefix of a series");
    auto* forecast = app.add_subcommand("forecast", "Forecast future samples past the end of a series");
    auto* evaluate_cmd = app.add_subcommand("evaluate", "RMSE and MAPE of a forecast against observations");
    auto* schedule = app.add_subcommand("schedule", "Derive a rejuvenation time from forecast threshold crossings");
    auto* bench = app.add_subcommand("bench", "RBFNN vs MLP on the frozen synthetic benchmark");
    auto* plotdata = app.add_subcommand("plotdata", "Observed vs predicted columns over the test segment");
    setup_generate(*generate, gen);
    setup_train(*train, tr);
    setup_forecast(*forecast, fc);
    setup_evaluate(*evaluate_cmd, ev);
    setup_schedule(*schedule, sc);
    setup_bench(*bench, bn);
    setup_plotdata(*plotdata, pl);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*generate) {
            run_generate(*generate, gen);
        } else if (*train) {
            run_train(tr);
        } else if (*forecast) {
            run_forecast(fc);
        } else if (*evaluate_cmd) {
            run_evaluate(ev);
        } else if (*schedule) {
            run_schedule(sc);
        } else if (*bench) {
            run_bench(*bench, bn);
        } else if (*plotdata) {
            run_plotdata(pl);
        }
    } catch (const UsageError& e) {
        err << "agewatch: usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "agewatch: error: " << e.what() << '\n';
        return kExitDataError;
    }
    return kExitOk;
}

int run(const std::vector<std::string>& args) { return run(args, std::cout, std::cerr); }

} // namespace agewatch::cli
