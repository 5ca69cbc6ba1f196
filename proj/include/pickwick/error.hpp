#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pickwick {

enum class ErrorCode {
  PointOutsideBall,
  DimensionMismatch,
  LengthMismatch,
  SizeMismatch,
  ShapeMismatch,
  KernelSeriesDiverged,
  NotHermitian,
  NotPsd,
  GramMismatch,
  NotImplemented,
  NotCompletePick,
  NotNormalized,
  ZeroKernelEntry,
  NotRowContraction,
  NotCommuting,
  NotMonomialIdeal,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// front ends can map it (the CLI turns NotPsd / NotCompletePick into the
/// "infeasible" exit status).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace pickwick
