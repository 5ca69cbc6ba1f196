#pragma once

#include <vector>

#include "pickwick/core/linalg.hpp"
#include "pickwick/optheory/matrix_tuple.hpp"

namespace pickwick {

struct DilationReport {
  unsigned cutoff = 0;
  /// ||V_N^* V_N - I||.
  double isometry_defect = 0.0;
  /// ||(M_{z_i}^* (x) I) V_N - V_N T_i^*|| on degrees <= N-1.
  std::vector<double> intertwining_residual;
  /// ||theta^{N+1}(I)||.
  double purity_tail = 0.0;
  double row_norm = 0.0;
};

/// Truncated dilation isometry of a pure commuting row contraction into
/// H^2_d (x) C^n. Block alpha (rows alpha*n ... alpha*n + n-1, graded-lex
/// order over |alpha| <= N) is sqrt(|alpha|!/alpha!) Delta (T^*)^alpha, so
/// V_N^* V_N = I - theta^{N+1}(I).
Matrix dilation_isometry(const MatrixTuple& t, unsigned cutoff);

/// Per-coordinate intertwining residual. The block row of degree N is
/// excluded, since M_{z_i}^* applied there needs degree N+1 blocks.
std::vector<double> intertwine_residual(const MatrixTuple& t, const Matrix& v, unsigned cutoff);

DilationReport dilation_report(const MatrixTuple& t, unsigned cutoff);

enum class VnVerdict { Satisfied, Violation, Inconclusive };

struct VnReport {
  /// ||p(T)||.
  double lhs = 0.0;
  /// mult_norm_lower(p, k) for k = 0..N.
  std::vector<double> rhs_curve;
  VnVerdict verdict = VnVerdict::Inconclusive;
  double tolerance = 1e-8;
};

/// Drury's von Neumann inequality ||p(T)|| <= ||p||_Mult checked against the
/// compression lower bounds. A violation is reported only when the curve has
/// stabilized.
VnReport vn_report(const MatrixTuple& t, const PowerSeries& p, unsigned cutoff);

const char* to_string(VnVerdict v);

}  // namespace pickwick
