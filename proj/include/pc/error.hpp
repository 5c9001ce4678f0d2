#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pc {

enum class ErrorCode {
    InvalidArgument,
    LoopEdge,
    VertexOutOfRange,
    MalformedGraph6,
    MalformedInput,
    OverlappingSets,
    Disconnected,
    TooLarge,
    SameVertex,
    NotAPath,
    NotATree,
    HasBridge,
    NotABridge,
    PaletteAlignmentImpossible,
    VerificationFailed,
    VerificationExhausted,
    DegreeTooLow,
    IsolatedNewVertex,
    RequiresStrongProperty,
    BadPartition,
    ColoringGraphMismatch,
    FixturesMissing,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace pc
