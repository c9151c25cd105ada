#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fexp {

enum class ErrorCode {
  kNotPrime,
  kNotIrreducible,
  kBadDegree,
  kInvalidArgument,
  kParamsMismatch,
  kZeroInverse,
  kIdentityBase,
  kSearchExhausted,
  kCapExceeded,
  kNotFound,
  kOracleFailure,
  kOracleInconsistent,
  kBadThreshold,
  kVerifyFailed,
  kUnsupportedN,
  kFormat,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised by VSS reconstruction when a submitted share fails its commitment
/// check; carries the offending share index.
class VerifyFailedError : public Error {
 public:
  explicit VerifyFailedError(std::size_t index)
      : Error(ErrorCode::kVerifyFailed,
              "share " + std::to_string(index) + " does not match commitments"),
        index_(index) {}

  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

}  // namespace fexp
