#include "balines/error.hpp"

namespace balines {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "INVALID_INPUT";
    case ErrorCode::OddPointCount: return "ODD_POINT_COUNT";
    case ErrorCode::CollinearWitness: return "COLLINEAR_WITNESS";
    case ErrorCode::DegenerateInput: return "DEGENERATE_INPUT";
    case ErrorCode::FailsToSeparate: return "FAILS_TO_SEPARATE";
    case ErrorCode::BadParams: return "BAD_PARAMS";
    case ErrorCode::GenerationExhausted: return "GENERATION_EXHAUSTED";
    case ErrorCode::MixedColors: return "MIXED_COLORS";
    case ErrorCode::InsufficientBorder: return "INSUFFICIENT_BORDER";
    case ErrorCode::ProofGap: return "PROOF_GAP";
  }
  return "UNKNOWN";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace balines
