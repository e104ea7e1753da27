#pragma once

#include <charconv>
#include <cstdlib>
#include <string>
#include <system_error>

#include "emm/errors.hpp"

namespace emm {

/// Shortest decimal representation that round-trips to the same double.
inline std::string format_double(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    if (res.ec != std::errc()) {
        throw ContractError("format_double: to_chars failed");
    }
    return std::string(buf, res.ptr);
}

inline double parse_double(const std::string& text) {
    double value = 0.0;
    const auto res =
        std::from_chars(text.data(), text.data() + text.size(), value);
    if (res.ec != std::errc()) {
        throw ConfigError("parse_double: cannot parse '" + text + "'");
    }
    return value;
}

} // namespace emm
