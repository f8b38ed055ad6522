#pragma once

#include <stdexcept>
#include <string>

namespace basel {

// Invalid operand for an operation: division by zero, an odd order where an
// even one is required, a ratio whose pi power would go negative, ...
struct DomainError : std::domain_error {
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// A sequence argument is shorter than the requested order.
struct ArityError : std::invalid_argument {
    explicit ArityError(const std::string& what) : std::invalid_argument(what) {}
};

// A request exceeds the configured precision ceiling or work budget.
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace basel
