#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hexpoint {

/// Every failure the library can report. The mapping to CLI exit codes and
/// HTTP statuses lives in `error_info` and is the single source of truth for
/// both front ends.
enum class ErrorCode {
  InvalidArgument,
  OutOfBounds,
  OccupiedCell,
  GameOver,
  BoardNotFull,
  BoardParseError,
  DegreeTooHigh,
  BoardTooLarge,
  ResourceLimit,
  MissingLabel,
  ImproperLabeling,
  MapRangeError,
  DivisionByZero,
  NegativeSqrt,
  SyntaxError,
  ArityError,
  NotFound,
  WinningPathExists,
  OutOfBoundsDisplacement,
  SessionNotFound,
  CorruptSession,
  BadRequest,
};

struct ErrorInfo {
  ErrorCode code;
  std::string_view name;
  int exit_code;
  int http_status;
};

inline constexpr std::array<ErrorInfo, 22> kErrorTable{{
    {ErrorCode::InvalidArgument, "InvalidArgument", 2, 400},
    {ErrorCode::OutOfBounds, "OutOfBounds", 2, 422},
    {ErrorCode::OccupiedCell, "OccupiedCell", 2, 409},
    {ErrorCode::GameOver, "GameOver", 2, 409},
    {ErrorCode::BoardNotFull, "BoardNotFull", 2, 409},
    {ErrorCode::BoardParseError, "BoardParseError", 2, 400},
    {ErrorCode::DegreeTooHigh, "DegreeTooHigh", 2, 422},
    {ErrorCode::BoardTooLarge, "BoardTooLarge", 3, 503},
    {ErrorCode::ResourceLimit, "ResourceLimit", 3, 503},
    {ErrorCode::MissingLabel, "MissingLabel", 2, 422},
    {ErrorCode::ImproperLabeling, "ImproperLabeling", 2, 422},
    {ErrorCode::MapRangeError, "MapRangeError", 2, 422},
    {ErrorCode::DivisionByZero, "DivisionByZero", 2, 422},
    {ErrorCode::NegativeSqrt, "NegativeSqrt", 2, 422},
    {ErrorCode::SyntaxError, "SyntaxError", 2, 422},
    {ErrorCode::ArityError, "ArityError", 2, 422},
    {ErrorCode::NotFound, "NotFound", 2, 404},
    {ErrorCode::WinningPathExists, "WinningPathExists", 2, 409},
    {ErrorCode::OutOfBoundsDisplacement, "OutOfBoundsDisplacement", 2, 409},
    {ErrorCode::SessionNotFound, "SessionNotFound", 2, 404},
    {ErrorCode::CorruptSession, "CorruptSession", 2, 409},
    {ErrorCode::BadRequest, "BadRequest", 2, 400},
}};

constexpr const ErrorInfo& error_info(ErrorCode code) {
  for (const auto& info : kErrorTable) {
    if (info.code == code) return info;
  }
  return kErrorTable[0];
}

/// Exception carrying a stable error code. All library errors derive from it.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return error_info(code_).name; }

 private:
  ErrorCode code_;
};

}  // namespace hexpoint
