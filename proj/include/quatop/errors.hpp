#ifndef QUATOP_ERRORS_HPP
#define QUATOP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace quatop {

/// Mismatched dimensions or malformed structure.
struct ShapeError : std::runtime_error {
    explicit ShapeError(const std::string& what) : std::runtime_error(what) {}
};

/// Input file or serialized object violates its format contract.
struct FormatError : std::runtime_error {
    explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

/// A stated precondition does not hold (non-normal input, rank deficiency, ...).
struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

/// A numerical routine failed to meet its residual contract.
struct NumericalError : std::runtime_error {
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace quatop

#endif  // QUATOP_ERRORS_HPP
