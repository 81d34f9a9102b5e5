#ifndef QUIVERFAN_ERRORS_HPP
#define QUIVERFAN_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace quiverfan {

enum class ErrorCode {
    MalformedInput,
    DisconnectedQuiver,
    OrientedCycle,
    DuplicateId,
    UnknownVertex,
    NotAWalk,
    NotASpanningTree,
    UnboundedPolytope,
    NotGeneralPosition,
    StableArrowSetNotFull,
    FanNotSmooth,
    FanNotComplete,
    QuotientHasOrientedCycle,
    InstanceTooLarge,
    InternalInconsistency,
};

constexpr std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::MalformedInput: return "MalformedInput";
        case ErrorCode::DisconnectedQuiver: return "DisconnectedQuiver";
        case ErrorCode::OrientedCycle: return "OrientedCycle";
        case ErrorCode::DuplicateId: return "DuplicateId";
        case ErrorCode::UnknownVertex: return "UnknownVertex";
        case ErrorCode::NotAWalk: return "NotAWalk";
        case ErrorCode::NotASpanningTree: return "NotASpanningTree";
        case ErrorCode::UnboundedPolytope: return "UnboundedPolytope";
        case ErrorCode::NotGeneralPosition: return "NotGeneralPosition";
        case ErrorCode::StableArrowSetNotFull: return "StableArrowSetNotFull";
        case ErrorCode::FanNotSmooth: return "FanNotSmooth";
        case ErrorCode::FanNotComplete: return "FanNotComplete";
        case ErrorCode::QuotientHasOrientedCycle: return "QuotientHasOrientedCycle";
        case ErrorCode::InstanceTooLarge: return "InstanceTooLarge";
        case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    }
    return "Unknown";
}

/// Input rejected before any computation (exit status 1 in the CLI);
/// everything else is a domain error.
constexpr bool is_input_error(ErrorCode code) {
    return code == ErrorCode::MalformedInput || code == ErrorCode::DisconnectedQuiver ||
           code == ErrorCode::OrientedCycle || code == ErrorCode::DuplicateId;
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail)
        : std::runtime_error(std::string(to_string(code)) + ": " + detail),
          code_(code),
          detail_(detail) {}

    ErrorCode code() const noexcept { return code_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    ErrorCode code_;
    std::string detail_;
};

}  // namespace quiverfan

#endif  // QUIVERFAN_ERRORS_HPP
