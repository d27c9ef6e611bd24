#include "torica/error.hpp"

namespace torica {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::TooFewRays: return "TooFewRays";
    case ErrorCode::NonPrimitiveRay: return "NonPrimitiveRay";
    case ErrorCode::NotUnimodular: return "NotUnimodular";
    case ErrorCode::NotComplete: return "NotComplete";
    case ErrorCode::NotRealizable: return "NotRealizable";
    case ErrorCode::NotMinusOneCurve: return "NotMinusOneCurve";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::IndexMismatch: return "IndexMismatch";
    case ErrorCode::FanMismatch: return "FanMismatch";
    case ErrorCode::InconsistentDegrees: return "InconsistentDegrees";
    case ErrorCode::NotAmple: return "NotAmple";
    case ErrorCode::AdjacentContractions: return "AdjacentContractions";
    case ErrorCode::EulerTooSmall: return "EulerTooSmall";
    case ErrorCode::RankNotTwo: return "RankNotTwo";
    case ErrorCode::NotUnstable: return "NotUnstable";
    case ErrorCode::NonPositiveSquare: return "NonPositiveSquare";
    case ErrorCode::NoAmpleFound: return "NoAmpleFound";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

std::string compose(ErrorCode code, const std::string& detail,
                    std::optional<std::size_t> index) {
  std::string msg(to_string(code));
  if (index) msg += "(" + std::to_string(*index) + ")";
  if (!detail.empty()) msg += ": " + detail;
  return msg;
}

}  // namespace

Error::Error(ErrorCode code, const std::string& detail,
             std::optional<std::size_t> index)
    : std::runtime_error(compose(code, detail, index)), code_(code), index_(index) {}

}  // namespace torica
