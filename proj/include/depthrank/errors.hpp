#pragma once

#include <stdexcept>
#include <string>

namespace depthrank {

// Raised when input data cannot be used: parse failures, dimension
// mismatches, too few observations.
class data_error : public std::runtime_error {
public:
    explicit data_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a computation degenerates numerically: singular matrices,
// zero projected scale, non-convergent series or quadrature.
class numeric_error : public std::runtime_error {
public:
    explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised for method/mode combinations that are defined but not provided,
// e.g. exact halfspace depth in dimension three.
class unsupported_error : public std::runtime_error {
public:
    explicit unsupported_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace depthrank
