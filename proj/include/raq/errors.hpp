#pragma once

#include <stdexcept>
#include <string>

namespace raq {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input that is structurally broken (ragged table, out-of-range index,
// non-group multiplication table). Distinct from axiom failure, which is
// reported through diagnostics, not exceptions.
struct MalformedInputError : Error {
    using Error::Error;
};

// A caller violated a documented precondition (non-unit Alexander parameter,
// modulus < 2, composite prime, quandle theory on a non-quandle, ...).
struct PreconditionError : Error {
    using Error::Error;
};

// Chain complex with inconsistent boundary shapes.
struct StructureError : Error {
    using Error::Error;
};

// A requested tuple basis would exceed the configured size budget.
struct BudgetError : Error {
    using Error::Error;
};

}  // namespace raq
