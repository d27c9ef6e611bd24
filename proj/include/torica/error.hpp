#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace torica {

enum class ErrorCode {
  TooFewRays,
  NonPrimitiveRay,
  NotUnimodular,
  NotComplete,
  NotRealizable,
  NotMinusOneCurve,
  IndexOutOfRange,
  IndexMismatch,
  FanMismatch,
  InconsistentDegrees,
  NotAmple,
  AdjacentContractions,
  EulerTooSmall,
  RankNotTwo,
  NotUnstable,
  NonPositiveSquare,
  NoAmpleFound,
  InvalidArgument,
  ParseError,
};

std::string_view to_string(ErrorCode code);

/// The single exception type thrown by the library. `index()` carries the
/// offending ray/position where the error names one (e.g. NotUnimodular(i)).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail,
        std::optional<std::size_t> index = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> index() const noexcept { return index_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> index_;
};

}  // namespace torica
