#ifndef BOXKIT_ERRORS_HPP
#define BOXKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace boxkit {

// Thrown when a construction or certificate fails its verification step.
// Bad arguments (out-of-range vertices, malformed parameters, exceeded
// guards) use std::invalid_argument instead.
class VerifyError : public std::runtime_error {
public:
    explicit VerifyError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace boxkit

#endif
