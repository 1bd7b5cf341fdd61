#include "agewatch/metrics.hpp"

#include "agewatch/error.hpp"
#include "agewatch/format.hpp"

#include <cmath>

namespace agewatch {

namespace {

void check_pair(std::span<const double> a, std::span<const double> b) {
    if (a.empty() || b.empty()) {
        throw Error("metrics need non-empty inputs");
    }
    if (a.size() != b.size()) {
        throw Error("length mismatch: " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
    }
}

} // namespace

double rmse(std::span<const double> predicted, std::span<const double> target) {
    check_pair(predicted, target);
    double sum = 0.0;
    for (std::size_t i = 0; i < predicted.size(); ++i) {
        const double d = predicted[i] - target[i];
        sum += d * d;
    }
    return std::sqrt(sum / static_cast<double>(predicted.size()));
}

double mape(std::span<const double> original, std::span<const double> forecast) {
    check_pair(original, forecast);
    double sum = 0.0;
    for (std::size_t t = 0; t < original.size(); ++t) {
        if (original[t] == 0.0) {
            throw Error("zero original value at index " + std::to_string(t));
        }
        sum += std::abs((original[t] - forecast[t]) / original[t]);
    }
    return sum / static_cast<double>(original.size()) * 100.0;
}

EvaluationReport evaluate(const std::string& indicator, std::span<const double> predicted,
                          std::span<const double> target) {
    EvaluationReport report;
    report.indicator = indicator;
    report.rmse = rmse(predicted, target);
    report.mape_percent = mape(target, predicted);
    report.n_samples = predicted.size();
    if (!std::isfinite(report.rmse) || !std::isfinite(report.mape_percent)) {
        throw Error("non-finite metric for '" + indicator + "'");
    }
    return report;
}

std::string to_csv_row(const EvaluationReport& report) {
    return report.indicator + ',' + format_double(report.rmse) + ',' + format_double(report.mape_percent) +
           ',' + std::to_string(report.n_samples);
}

} // namespace agewatch
