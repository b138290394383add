// errors.hpp — typed error codes shared across the library.
#pragma once

#include <stdexcept>
#include <string>

namespace hexcut {

enum class ErrorCode {
    IllegalStep,
    NotClosed,
    NotSimple,
    TooShort,
    NotConnected,
    HasHoles,
    UnbalancedCuts,
    Overflow,
    BoundExceeded,
    InconsistentDirections,
    InvalidParameter,
    NotALatticeEdge,
    ParseError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + detail),
          code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

} // namespace hexcut
