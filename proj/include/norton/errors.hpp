#pragma once

#include <stdexcept>
#include <string>

namespace norton {

// Parameters outside a construction's domain (CLI exit status 2).
class InvalidParameters : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A configured vertex/fingerprint/enumeration budget would be exceeded (exit status 3).
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An internal self-check failed: formula vs oracle, closed form vs computation, etc. (exit status 1).
class VerificationFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace norton
