#include "qboost/errors.hpp"

namespace qboost {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::AccardiUndefined: return "AccardiUndefined";
        case ErrorKind::BoostUndefined: return "BoostUndefined";
        case ErrorKind::EmptyArm: return "EmptyArm";
        case ErrorKind::ArmStarvation: return "ArmStarvation";
        case ErrorKind::MalformedInput: return "MalformedInput";
        case ErrorKind::IoFailure: return "IoFailure";
    }
    return "Unknown";
}

}  // namespace qboost
