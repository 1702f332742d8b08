#include "core/error.hpp"

namespace skyrmech {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NonConvergedQuadrature: return "NonConvergedQuadrature";
    case ErrorCode::TruncationNotConverged: return "TruncationNotConverged";
    case ErrorCode::OutOfSlab: return "OutOfSlab";
    case ErrorCode::ModulusOutOfRange: return "ModulusOutOfRange";
    case ErrorCode::SqueezeDiverges: return "SqueezeDiverges";
    case ErrorCode::InvalidRegimeInput: return "InvalidRegimeInput";
    case ErrorCode::PlacementCollision: return "PlacementCollision";
    case ErrorCode::StepSizeUnderflow: return "StepSizeUnderflow";
    case ErrorCode::TraceDrift: return "TraceDrift";
    case ErrorCode::NotExcitationConserving: return "NotExcitationConserving";
    case ErrorCode::EnergyInBand: return "EnergyInBand";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::ScenarioFailure: return "ScenarioFailure";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace skyrmech
