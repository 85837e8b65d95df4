#pragma once

#include <stdexcept>
#include <string>

namespace idforge {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A caller broke a documented precondition (negative exponent on a non-q
// variable, missing variable in an evaluation, q = 0 against a Laurent
// exponent, ...).
struct ContractViolation : Error {
    using Error::Error;
};

// Structural parameters do not satisfy an identity's schema, or a grid/CLI
// binding is malformed.
struct SchemaError : Error {
    using Error::Error;
};

// A symbolic expansion grew past the configured monomial budget. Reported as
// a distinct "aborted" verdict, never as pass or fail.
struct TermBudgetExceeded : Error {
    using Error::Error;
};

// Command-line usage problem; maps to exit code 2.
struct UsageError : Error {
    using Error::Error;
};

}  // namespace idforge
