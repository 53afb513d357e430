#include "rsthl/error.hpp"

namespace rsthl {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::EvaluationAtPole: return "EvaluationAtPole";
    case ErrorCode::DegenerateMetric: return "DegenerateMetric";
    case ErrorCode::InconsistentSystem: return "InconsistentSystem";
    case ErrorCode::UnderdeterminedSystem: return "UnderdeterminedSystem";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NoTotallyRealSection: return "NoTotallyRealSection";
    case ErrorCode::RadicalRankNotOne: return "RadicalRankNotOne";
    case ErrorCode::ScreenDegenerate: return "ScreenDegenerate";
    case ErrorCode::NoSuchN: return "NoSuchN";
    case ErrorCode::InvalidFrame: return "InvalidFrame";
    case ErrorCode::NotRSTHL: return "NotRSTHL";
    case ErrorCode::NotAscreen: return "NotAscreen";
    case ErrorCode::MuZero: return "MuZero";
    case ErrorCode::DecompositionInconsistent: return "DecompositionInconsistent";
    case ErrorCode::NotEtaEinstein: return "NotEtaEinstein";
    case ErrorCode::NotEinstein: return "NotEinstein";
    case ErrorCode::CrossCheckMismatch: return "CrossCheckMismatch";
    case ErrorCode::SchemaViolation: return "SchemaViolation";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace rsthl
