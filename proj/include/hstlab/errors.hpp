#pragma once

#include <stdexcept>

namespace hstlab {

/// Thrown when an enumeration or complex outgrows its configured budget.
class ResourceLimitExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace hstlab
