#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nalg {

enum class ErrorKind {
    DimensionMismatch,
    SingularMatrix,
    IndexOutOfRange,
    ParseError,
    UnknownName,
    UnassignedVariable,
    UnknownSystem,
    UnknownFixture,
    UnknownSuite,
    UnknownOperation,
    DegenerateForm,
    NotSkew,
    NotCocycle,
    NotAntiO,
    NotPerm,
    OperatorAxiomFails,
    NotAntiPreLeibniz,
    NotPreLeibniz,
    NotNovikovDialgebra,
    NotGDAlgebra,
    NotGDDialgebra,
    PreconditionFailed,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI in particular) can map it to an exit code.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace nalg
