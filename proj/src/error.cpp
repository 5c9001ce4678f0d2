#include "pc/error.hpp"

namespace pc {

std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::MalformedGraph6: return "MalformedGraph6";
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::OverlappingSets: return "OverlappingSets";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::SameVertex: return "SameVertex";
    case ErrorCode::NotAPath: return "NotAPath";
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::HasBridge: return "HasBridge";
    case ErrorCode::NotABridge: return "NotABridge";
    case ErrorCode::PaletteAlignmentImpossible: return "PaletteAlignmentImpossible";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::VerificationExhausted: return "VerificationExhausted";
    case ErrorCode::DegreeTooLow: return "DegreeTooLow";
    case ErrorCode::IsolatedNewVertex: return "IsolatedNewVertex";
    case ErrorCode::RequiresStrongProperty: return "RequiresStrongProperty";
    case ErrorCode::BadPartition: return "BadPartition";
    case ErrorCode::ColoringGraphMismatch: return "ColoringGraphMismatch";
    case ErrorCode::FixturesMissing: return "FixturesMissing";
    }
    return "Unknown";
}

}  // namespace pc
