#pragma once

#include <cstddef>
#include <span>
#include <string>

namespace agewatch {

struct EvaluationReport {
    std::string indicator;
    double rmse = 0.0;
    double mape_percent = 0.0;
    std::size_t n_samples = 0;
};

/// sqrt(mean((predicted - target)^2)). Equal, non-empty lengths.
double rmse(std::span<const double> predicted, std::span<const double> target);

/// Mean absolute percentage error, in percent: mean(|(y - f) / y|) * 100.
/// Any zero in `original` is rejected with its index.
double mape(std::span<const double> original, std::span<const double> forecast);

/// Both metrics in the original (unscaled) units.
EvaluationReport evaluate(const std::string& indicator, std::span<const double> predicted,
                          std::span<const double> target);

inline constexpr const char* kReportCsvHeader = "indicator,rmse,mape_percent,n_samples";
std::string to_csv_row(const EvaluationReport& report);

} // namespace agewatch
