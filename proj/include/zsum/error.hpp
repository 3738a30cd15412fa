#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace zsum {

enum class ErrorCode {
  invalid_parameters,
  malformed_table,
  non_associative,
  not_normal,
  limit_exceeded,
  budget_exceeded,
  not_applicable,
  missing_context,
  precondition_violated,
  modulus_mismatch,
  size_precondition,
  bad_order,
  usage,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace zsum
