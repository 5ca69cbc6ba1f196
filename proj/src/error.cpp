#include "pickwick/error.hpp"

namespace pickwick {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::PointOutsideBall: return "PointOutsideBall";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::KernelSeriesDiverged: return "KernelSeriesDiverged";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotPsd: return "NotPsd";
    case ErrorCode::GramMismatch: return "GramMismatch";
    case ErrorCode::NotImplemented: return "NotImplemented";
    case ErrorCode::NotCompletePick: return "NotCompletePick";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::ZeroKernelEntry: return "ZeroKernelEntry";
    case ErrorCode::NotRowContraction: return "NotRowContraction";
    case ErrorCode::NotCommuting: return "NotCommuting";
    case ErrorCode::NotMonomialIdeal: return "NotMonomialIdeal";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace pickwick
