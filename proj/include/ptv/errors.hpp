// Error types shared across the library.
#pragma once

#include <stdexcept>
#include <string>

namespace ptv {

struct invalid_matrix_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct not_pseudo_anosov_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct invalid_surface_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct unsupported_surface_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct nonconvergence_error : std::runtime_error {
    double last_residual;
    nonconvergence_error(const std::string& msg, double residual)
        : std::runtime_error(msg), last_residual(residual) {}
};

struct non_geometric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace ptv
