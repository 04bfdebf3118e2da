#pragma once

#include <stdexcept>
#include <string>

namespace gz {

// Iterative routine failed to converge (root finder, degenerate eigenvector pairing).
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Mathematical precondition violated: degenerate spectral data, off-fiber input,
// non-strongly-regular seed, zero torus coordinate.
struct GenericityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace gz
