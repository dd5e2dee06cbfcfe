#include "veer/error.hpp"

namespace veer {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotPrimitive: return "NotPrimitive";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::IncompleteTrack: return "IncompleteTrack";
    case ErrorCode::IllegalRegion: return "IllegalRegion";
    case ErrorCode::SwitchViolation: return "SwitchViolation";
    case ErrorCode::NonpositiveWeight: return "NonpositiveWeight";
    case ErrorCode::NotFullyPunctured: return "NotFullyPunctured";
    case ErrorCode::NotHyperbolic: return "NotHyperbolic";
    case ErrorCode::NotLarge: return "NotLarge";
    case ErrorCode::NotSmall: return "NotSmall";
    case ErrorCode::NotMixed: return "NotMixed";
    case ErrorCode::NotFoldable: return "NotFoldable";
    case ErrorCode::CentralSplit: return "CentralSplit";
    case ErrorCode::CentralSplitInBatch: return "CentralSplitInBatch";
    case ErrorCode::SelfAdjacentEdge: return "SelfAdjacentEdge";
    case ErrorCode::ClosingMismatch: return "ClosingMismatch";
    case ErrorCode::NotTaut: return "NotTaut";
    case ErrorCode::VeeringRequired: return "VeeringRequired";
    case ErrorCode::DegenerateSystem: return "DegenerateSystem";
    case ErrorCode::BoundViolated: return "BoundViolated";
    case ErrorCode::BadParameters: return "BadParameters";
    case ErrorCode::NotPseudoAnosov: return "NotPseudoAnosov";
    case ErrorCode::NoPeriod: return "NoPeriod";
    case ErrorCode::Parse: return "ParseError";
  }
  return "Unknown";
}

}  // namespace veer
