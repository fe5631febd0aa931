#pragma once

#include <stdexcept>
#include <string>

namespace eqalg {

enum class ErrorCode {
  CapExceeded,
  RingMismatch,
  NotAComplex,
  IsotropyNotInFamily,
  ObjectMismatch,
  NotASubgroup,
  FunctorNotAdditive,
  NotBijective,
  InfiniteOrder,
  FiniteOrder,
  NotNormalised,
  InvalidInput,
};

const char* error_code_name(ErrorCode code);

/// Domain error raised by every module. The code names the failure so the
/// CLI can report it in machine-readable form.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  const char* name() const noexcept { return error_code_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace eqalg
