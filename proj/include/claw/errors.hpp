#pragma once

#include <stdexcept>
#include <string>

namespace claw {

/// Malformed or inconsistent input data (files, expressions, headers).
struct data_error : std::runtime_error {
    explicit data_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace claw
