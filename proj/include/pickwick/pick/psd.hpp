#pragma once

#include "pickwick/core/linalg.hpp"

namespace pickwick {

inline constexpr double kDefaultPsdTolerance = 1e-9;

struct PsdVerdict {
  bool is_psd = false;
  double min_eigenvalue = 0.0;
  /// Absolute threshold actually applied: tol * (1 + ||M||_2).
  double tolerance_used = 0.0;
};

/// Eigenvalue test for positive semidefiniteness with a tolerance relative to
/// the matrix norm. Throws NotHermitian if M is not Hermitian within that
/// tolerance; the Hermitian part is tested.
PsdVerdict psd_check(const Matrix& m, double tol = kDefaultPsdTolerance);

}  // namespace pickwick
