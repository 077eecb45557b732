#pragma once

#include <stdexcept>
#include <string>

namespace vstyle {

// Error hierarchy. Exit-code mapping lives in the CLI: config/validation
// errors -> 1, runtime errors -> 2.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad configuration value, unknown key, invalid CLI argument.
struct config_error : error {
    using error::error;
};

// Tensor/image shape mismatch.
struct dim_error : error {
    using error::error;
};

// Wrong refiner window arity (distinct from shape problems).
struct arity_error : error {
    using error::error;
};

// Missing or insufficient input data.
struct data_error : error {
    using error::error;
};

// File / serialization problems.
struct io_error : error {
    using error::error;
};

// NaN/Inf where finite values are required.
struct numeric_error : error {
    using error::error;
};

// Value outside its documented domain (e.g. parsing map not in [0,1]).
struct domain_error : error {
    using error::error;
};

// Checkpoint/config incompatibility.
struct compat_error : error {
    using error::error;
};

}  // namespace vstyle
