#include "configprob/errors.hpp"

namespace configprob {

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NegativeDegree: return "NegativeDegree";
        case ErrorKind::OddStubTotal: return "OddStubTotal";
        case ErrorKind::LengthMismatch: return "LengthMismatch";
        case ErrorKind::UnbalancedStubs: return "UnbalancedStubs";
        case ErrorKind::InvalidSpec: return "InvalidSpec";
        case ErrorKind::SameVertex: return "SameVertex";
        case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "Error";
}

} // namespace configprob
