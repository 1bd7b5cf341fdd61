#pragma once

// Line-oriented reader/writer shared by the model document formats.

#include "agewatch/error.hpp"
#include "agewatch/format.hpp"

#include <cmath>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace agewatch::detail {

inline void append_row(std::string& out, std::span<const double> row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (i > 0) {
            out += ' ';
        }
        out += format_double(row[i]);
    }
    out += '\n';
}

class ModelReader {
public:
    ModelReader(std::string_view document, std::string_view kind) : kind_(kind) {
        std::size_t pos = 0;
        while (pos < document.size()) {
            auto nl = document.find('\n', pos);
            if (nl == std::string_view::npos) {
                nl = document.size();
            }
            auto line = document.substr(pos, nl - pos);
            if (!line.empty() && line.back() == '\r') {
                line.remove_suffix(1);
            }
            lines_.push_back(line);
            pos = nl + 1;
        }
    }

    // Accepts "<kind> v<version>"; only `supported` is understood.
    void expect_header(int supported) {
        const auto line = next("header");
        const auto space = line.find(' ');
        if (space == std::string_view::npos || line.substr(0, space) != kind_) {
            fail("not an " + std::string(kind_) + " model document");
        }
        const auto version = line.substr(space + 1);
        if (version.empty() || version[0] != 'v' || !parse_integer(version.substr(1))) {
            fail("malformed version tag '" + std::string(version) + "'");
        }
        if (*parse_integer(version.substr(1)) != supported) {
            fail("unsupported model version '" + std::string(version) + "' (supported: v" +
                 std::to_string(supported) + ")");
        }
    }

    std::string_view next(std::string_view what) {
        if (index_ >= lines_.size()) {
            fail("truncated document: missing " + std::string(what));
        }
        return lines_[index_++];
    }

    double scalar(std::string_view key) {
        const auto line = next(key);
        const auto space = line.find(' ');
        if (space == std::string_view::npos || line.substr(0, space) != key) {
            fail("expected '" + std::string(key) + "' at line " + std::to_string(index_));
        }
        const auto value = parse_double(trim(line.substr(space + 1)));
        if (!value || !std::isfinite(*value)) {
            fail("corrupted field '" + std::string(key) + "' at line " + std::to_string(index_));
        }
        return *value;
    }

    std::size_t count(std::string_view key) {
        const double value = scalar(key);
        if (value < 0 || value != std::floor(value) || value > 1e9) {
            fail("corrupted field '" + std::string(key) + "' at line " + std::to_string(index_));
        }
        return static_cast<std::size_t>(value);
    }

    // A row of exactly `expected` finite numbers; `shape_error` names the block.
    std::vector<double> row(std::size_t expected, std::string_view shape_error) {
        const auto line = next(shape_error);
        std::vector<double> values;
        std::size_t pos = 0;
        while (pos < line.size()) {
            auto space = line.find(' ', pos);
            if (space == std::string_view::npos) {
                space = line.size();
            }
            const auto token = line.substr(pos, space - pos);
            if (!token.empty()) {
                const auto value = parse_double(token);
                if (!value || !std::isfinite(*value)) {
                    fail("corrupted number '" + std::string(token) + "' at line " + std::to_string(index_));
                }
                values.push_back(*value);
            }
            pos = space + 1;
        }
        if (values.size() != expected) {
            fail(std::string(shape_error) + ": expected " + std::to_string(expected) + " values at line " +
                 std::to_string(index_) + ", found " + std::to_string(values.size()));
        }
        return values;
    }

    void expect_end(std::string_view shape_error) {
        while (index_ < lines_.size()) {
            if (!trim(lines_[index_]).empty()) {
                fail(std::string(shape_error) + ": unexpected content at line " + std::to_string(index_ + 1));
            }
            ++index_;
        }
    }

    [[noreturn]] void fail(const std::string& message) const {
        throw Error(std::string(kind_) + ": " + message);
    }

private:
    std::string_view kind_;
    std::vector<std::string_view> lines_;
    std::size_t index_ = 0;
};

} // namespace agewatch::detail
