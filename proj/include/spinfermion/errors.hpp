#ifndef SPINFERMION_ERRORS_HPP
#define SPINFERMION_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace spinfermion {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct SingularMatrix : Error {
    SingularMatrix() : Error("matrix is singular") {}
};

struct IncompatibleRepresentation : Error {
    using Error::Error;
};

struct RootValidationFailure : Error {
    using Error::Error;
};

struct RepeatedNodes : Error {
    RepeatedNodes() : Error("interpolation nodes are not pairwise distinct") {}
};

struct ZeroField : Error {
    ZeroField() : Error("field vector is zero") {}
};

struct IndexOutOfRange : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

} // namespace spinfermion

#endif
