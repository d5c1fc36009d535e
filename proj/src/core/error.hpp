#pragma once

#include <stdexcept>
#include <string>

namespace thetapoly {

enum class ErrorCode {
  parse,
  validation,
  not_divisible,
  order_exceeded,
  invalid_sign,
  unknown_name,
  bad_parameter,
  simplification_incomplete,
  non_cubic_exponent,
  witness_mismatch,
  certificate_violation,
  budget_exceeded,
  invalid_argument,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

}  // namespace thetapoly
