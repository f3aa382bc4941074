#pragma once

#include <stdexcept>

namespace deaconescu {

// Input is well formed but outside the range this build answers exactly.
// Thrown instead of ever returning an unverified result.
struct unsupported_input : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A configured memory or size cap would be exceeded.
struct resource_limit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace deaconescu
