#pragma once
#include <stdexcept>
#include <string>

namespace hb {

// Input/validation failures: bad indices, malformed words, ambient
// mismatches, unsupported exponents. CLI maps these to exit code 2.
struct ValidationError : std::invalid_argument {
    explicit ValidationError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Work-size guards tripped: tensor dimension, expansion breadth, image
// length, search state caps. CLI maps these to exit code 3.
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace hb
