#include "hexcut/errors.hpp"

namespace hexcut {

const char* error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::IllegalStep: return "IllegalStep";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::NotSimple: return "NotSimple";
    case ErrorCode::TooShort: return "TooShort";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::HasHoles: return "HasHoles";
    case ErrorCode::UnbalancedCuts: return "UnbalancedCuts";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::InconsistentDirections: return "InconsistentDirections";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::NotALatticeEdge: return "NotALatticeEdge";
    case ErrorCode::ParseError: return "ParseError";
    }
    return "UnknownError";
}

} // namespace hexcut
