#ifndef FAMSW_ERRORS_HPP
#define FAMSW_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace famsw {

/// Every failure the engine can report. The CLI maps these onto exit codes.
enum class ErrorCode {
  DegreeMismatch,
  NonConfluent,
  NonTerminating,
  DuplicateGenerator,
  InvalidGenerator,
  AmbientMismatch,
  ShapeMismatch,
  VirtualRank,
  NotALine,
  RankTooLarge,
  VirtualInput,
  WrongDegree,
  EvenM,
  RankBound,
  RangeError,
  BadMultiplicity,
  RepeatedOddGenerator,
  InterpolationRankDeficient,
  ParseError,
  UnknownName,
  JobError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code),
        message_(what) {}

  ErrorCode code() const noexcept { return code_; }
  /// The message without the code prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorCode code_;
  std::string message_;
};

}  // namespace famsw

#endif  // FAMSW_ERRORS_HPP
