#pragma once

#include <stdexcept>
#include <string>

namespace hopfbundle {

/// Two exact field elements live in different cyclotomic fields and the
/// operation requires a common conductor. Promote with aligned() first.
struct ConductorMismatch : std::invalid_argument {
    explicit ConductorMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct DivisionByZero : std::domain_error {
    explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};

/// Invalid input to a constructor or operation (repeated points, variable
/// mismatch, malformed spec parameters, ...).
struct InvalidArgument : std::invalid_argument {
    explicit InvalidArgument(const std::string& what) : std::invalid_argument(what) {}
};

/// Parse failure in the exact point/number mini-grammar.
struct ParseError : std::invalid_argument {
    explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

/// A chart map required to extend over the glued surface does not: its
/// conjugate picked up negative exponents.
struct GluingFailure : std::runtime_error {
    explicit GluingFailure(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hopfbundle
