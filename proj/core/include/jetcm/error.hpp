#pragma once

#include <stdexcept>
#include <string>

namespace jetcm {

enum class ErrorKind {
    DivisionByZero,
    DomainError,
    NotPolynomial,
    SyntaxError,
    UnknownSymbol,
    ArityError,
    DuplicateSection,
    DuplicateMapping,
    MissingSection,
    UnknownOption,
    NotSolvable,
    OverlappingPrincipals,
    SingularMatrix,
    OrderExceeded,
    NonUnitConstantTerm,
    Unsupported,
    Internal,
};

const char* error_kind_name(ErrorKind k);

/// Every failure in the engine is reported as an Error.  Parse errors carry
/// a 1-based line and column; all other kinds leave them at zero.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string message, int line = 0, int column = 0)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
          kind_(kind),
          line_(line),
          column_(column) {}

    ErrorKind kind() const { return kind_; }
    int line() const { return line_; }
    int column() const { return column_; }

private:
    ErrorKind kind_;
    int line_;
    int column_;
};

} // namespace jetcm
