#ifndef TERNCODE_ERRORS_HPP
#define TERNCODE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace terncode {

// Error hierarchy. The CLI maps these onto exit codes:
//   ArgumentError/ParseError -> 2, CapacityError -> 3, AuditError -> 4.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad dimensions, rank deficiency, out-of-domain parameters, violated preconditions.
struct ArgumentError : Error {
    using Error::Error;
};

// An enumeration would exceed the configured cap.
struct CapacityError : Error {
    using Error::Error;
};

// Malformed input file; carries the 1-based line number.
struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t line)
        : Error(msg + " (line " + std::to_string(line) + ")"), line_number(line) {}
    std::size_t line_number;
};

// Mass-formula residual nonzero, non-integral orbit term, or manifest integrity failure.
struct AuditError : Error {
    using Error::Error;
};

}  // namespace terncode

#endif
