#include "quadlab/error.hpp"

namespace quadlab {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::PoleHit: return "PoleHit";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::EscapedDuringSample: return "EscapedDuringSample";
    case ErrorCode::NoCycle: return "NoCycle";
    case ErrorCode::BracketFailure: return "BracketFailure";
    case ErrorCode::NoSignChange: return "NoSignChange";
    case ErrorCode::CriticalPoint: return "CriticalPoint";
    case ErrorCode::DerivativeVanished: return "DerivativeVanished";
    case ErrorCode::DegenerateSet: return "DegenerateSet";
    case ErrorCode::NotACycle: return "NotACycle";
    case ErrorCode::NoJuliaPixels: return "NoJuliaPixels";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::Inconclusive: return "Inconclusive";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace quadlab
