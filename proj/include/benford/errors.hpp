#pragma once

#include <stdexcept>
#include <string>

namespace benford {

// Thrown when an iterative numerical routine (quadrature, series summation)
// fails to reach the requested tolerance. The message names the offending
// interval or term range.
struct numerical_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when an operation needs an optional ingredient (CDF, inverse-Laplace
// kernel, sampler) that the distribution does not provide.
struct unsupported_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace benford
