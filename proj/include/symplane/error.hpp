#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace symplane {

enum class ErrorCode {
    NonFinite,
    InvalidArgument,
    ZeroVector,
    DegenerateScale,
    DegenerateDenominator,
    ParallelLines,
    ZeroDirection,
    CoincidentCenters,
    SingularPosition,
    InvalidStep,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::NonFinite: return "NonFinite";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::ZeroVector: return "ZeroVector";
        case ErrorCode::DegenerateScale: return "DegenerateScale";
        case ErrorCode::DegenerateDenominator: return "DegenerateDenominator";
        case ErrorCode::ParallelLines: return "ParallelLines";
        case ErrorCode::ZeroDirection: return "ZeroDirection";
        case ErrorCode::CoincidentCenters: return "CoincidentCenters";
        case ErrorCode::SingularPosition: return "SingularPosition";
        case ErrorCode::InvalidStep: return "InvalidStep";
    }
    return "Unknown";
}

/// Thrown by every operation whose precondition fails. code() tells the
/// failure apart without parsing the message.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace symplane
