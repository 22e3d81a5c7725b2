#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pairsuite {

enum class ErrorCode {
  kNonPrimeCharacteristic,
  kOrderTooLarge,
  kDivisionByZero,
  kFieldMismatch,
  kReducibleModulus,
  kLengthTooShort,
  kLengthMismatch,
  kDomainError,
  kSearchSpaceTooLarge,
  kSizeTooLarge,
  kDegreeTooLarge,
  kRadiusNonpositive,
  kParameterError,
  kNoSolution,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so the
/// CLI can map it to an exit status without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace pairsuite
