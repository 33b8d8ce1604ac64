#pragma once

#include <stdexcept>
#include <string>

namespace sprint {

// Invalid configuration or input data.  CLI maps this to exit status 1.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Numerical failure (non-convergence, trace drift, truncation drift).
// CLI maps this to exit status 2.
struct NumericsError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace sprint
