// Error taxonomy. Domain violations use std::domain_error /
// std::invalid_argument directly; the types below carry the cases the
// CLI maps onto distinct exit codes.
#ifndef CASIMIR_ERRORS_HPP
#define CASIMIR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace casimir {

// A material model was handed to an operation that has no meaning for it
// (e.g. conductivity of a perfect conductor).
struct unsupported_model_error : std::invalid_argument {
    explicit unsupported_model_error(const std::string& what)
        : std::invalid_argument(what) {}
};

// Quadrature or Matsubara summation failed to reach the requested tolerance.
struct non_convergence_error : std::runtime_error {
    explicit non_convergence_error(const std::string& what)
        : std::runtime_error(what) {}
};

// Round-trip denominator within machine distance of a cavity resonance.
struct pole_error : std::runtime_error {
    explicit pole_error(const std::string& what) : std::runtime_error(what) {}
};

// Bracketed root search found no sign change.
struct no_root_error : std::runtime_error {
    explicit no_root_error(const std::string& what)
        : std::runtime_error(what) {}
};

// Malformed CLI input (units, numbers, material files).
struct parse_error : std::invalid_argument {
    explicit parse_error(const std::string& what)
        : std::invalid_argument(what) {}
};

} // namespace casimir

#endif
