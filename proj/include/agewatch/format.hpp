#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace agewatch {

/// Shortest decimal text that parses back to the same double.
std::string format_double(double value);

/// Strict parse of a whole token as a double; nullopt on any leftover text.
std::optional<double> parse_double(std::string_view token);

std::optional<long long> parse_integer(std::string_view token);

std::string_view trim(std::string_view text);

} // namespace agewatch
