#pragma once

#include <stdexcept>
#include <string>

namespace selmer {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Operands live in different number fields.
struct FieldMismatchError : Error {
    FieldMismatchError() : Error("operands belong to different number fields") {}
};

struct ZeroDivisionError : Error {
    using Error::Error;
};

/// A precondition on the value of an argument failed (ordering, membership, dimension).
struct DomainError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

/// Interval refinement or a certification step exceeded its budget.
struct CertificationError : Error {
    using Error::Error;
};

}  // namespace selmer
