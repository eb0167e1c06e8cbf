#include "rsharp/errors.hpp"

namespace rsharp {

const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::SyntaxError: return "SyntaxError";
        case ErrorKind::UnknownVariable: return "UnknownVariable";
        case ErrorKind::NegativeExponent: return "NegativeExponent";
        case ErrorKind::DegreeCapExceeded: return "DegreeCapExceeded";
        case ErrorKind::NotMixedHomogeneous: return "NotMixedHomogeneous";
        case ErrorKind::NonpositiveWeight: return "NonpositiveWeight";
        case ErrorKind::HypothesisViolation: return "HypothesisViolation";
        case ErrorKind::InapplicableCondition: return "InapplicableCondition";
        case ErrorKind::AdaptationRequired: return "AdaptationRequired";
        case ErrorKind::IrrationalAdaptationRoot: return "IrrationalAdaptationRoot";
        case ErrorKind::DegenerateBox: return "DegenerateBox";
        case ErrorKind::UniquenessViolation: return "UniquenessViolation";
        case ErrorKind::ConsistencyFailure: return "ConsistencyFailure";
    }
    return "Unknown";
}

}  // namespace rsharp
