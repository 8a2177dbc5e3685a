#ifndef WCPSWF_ERRORS_HPP
#define WCPSWF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wcpswf {

// Thrown when an iteration fails to converge or a truncation cap is hit.
// Parameter/precondition violations use std::invalid_argument instead.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a formula denominator collapses (isolated negative-alpha
// resonances); carries the offending value in the message.
class DegenerateParameterError : public NumericalError {
public:
    explicit DegenerateParameterError(const std::string& what) : NumericalError(what) {}
};

} // namespace wcpswf

#endif
