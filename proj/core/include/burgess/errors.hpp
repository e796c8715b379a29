#pragma once

#include <stdexcept>

namespace burgess {

// Thrown when an enumeration or table would exceed desk-scale limits.
// The CLI maps this to its own exit code, distinct from bad parameters.
struct resource_guard_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace burgess
