#ifndef DYCKCHAINS_ERRORS_HPP
#define DYCKCHAINS_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dyck {

// Raised when an exhaustive computation would exceed a configured cap.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed step word. `position` is the 0-based index of the first offending step.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class LengthMismatchError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An exact-arithmetic identity failed (non-invertible divisor, failed cancellation,
// inexact division). Always indicates an upstream algebra or transcription bug.
class AlgebraError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NonConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Two independent computation routes produced different values.
class RouteDisagreement : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace dyck

#endif
