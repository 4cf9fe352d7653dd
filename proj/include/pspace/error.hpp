#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pspace {

enum class ErrorCode {
  invalid_argument,
  duplicate_label,
  antisymmetry_violation,
  unknown_label,
  empty_subset,
  empty_poset,
  size_limit_exceeded,
  invalid_topology,
  not_t0,
  base_mismatch,
  kind_mismatch,
  not_monotone,
  not_directed,
  meet_missing,
  join_missing,
  syntax_error,
  unbound_variable,
  unknown_op,
  iso_failure,
  io_error,
};

std::string_view to_string(ErrorCode code) noexcept;

// All failures raised by the library carry one of the codes above; the C API
// maps them one-to-one onto pspace_status values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace pspace
