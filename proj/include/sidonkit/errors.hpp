#pragma once

#include <stdexcept>
#include <string>

namespace sidon {

// Raised when an input exceeds one of the fixed resource guards
// (dimension, spectrum size, search depth).
struct capacity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised by the text-format readers; `line` is 1-based.
struct parse_error : std::runtime_error {
    parse_error(const std::string& msg, int line_no)
        : std::runtime_error(msg + " (line " + std::to_string(line_no) + ")"), line(line_no) {}
    int line;
};

}  // namespace sidon
