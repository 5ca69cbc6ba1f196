#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pickwick/core/linalg.hpp"
#include "pickwick/core/multi_index.hpp"
#include "pickwick/daspace/power_series.hpp"

namespace pickwick {

/// d square complex matrices of a common size n.
class MatrixTuple {
 public:
  MatrixTuple() = default;
  explicit MatrixTuple(std::vector<Matrix> matrices);

  std::size_t dimension() const noexcept { return matrices_.size(); }
  Eigen::Index size() const noexcept { return matrices_.empty() ? 0 : matrices_.front().rows(); }
  const Matrix& operator[](std::size_t i) const { return matrices_[i]; }
  const std::vector<Matrix>& matrices() const noexcept { return matrices_; }

  /// max_{i,j} ||T_i T_j - T_j T_i||.
  double commutator_defect() const;
  /// 1e-10 * (1 + max_i ||T_i||^2).
  double commuting_tolerance() const;
  bool is_commuting() const;
  /// Checks once and remembers the result; throws NotCommuting.
  void require_commuting() const;
  bool commuting_checked() const noexcept { return commuting_checked_; }

  /// Cached row norm.
  double row_norm() const;

  MatrixTuple scaled(double s) const;
  MatrixTuple adjoint() const;

 private:
  std::vector<Matrix> matrices_;
  mutable bool commuting_checked_ = false;
  mutable std::optional<double> row_norm_;
};

/// Largest singular value of the row [T_1 ... T_d]; equals sqrt(||sum T_i T_i^*||).
double row_norm(const MatrixTuple& t);

/// theta(A) = sum_i T_i A T_i^*.
Matrix theta_apply(const MatrixTuple& t, const Matrix& a);

/// theta^k(I).
Matrix theta_power(const MatrixTuple& t, unsigned k);

/// (I - sum T_i T_i^*)^{1/2}. Throws NotRowContraction when the row norm
/// exceeds 1 + 1e-12.
Matrix defect_root(const MatrixTuple& t);

/// T^alpha for every alpha in MonomialBasis order up to degree N, built from
/// predecessors; requires commuting matrices for the result to be
/// order-independent.
std::vector<Matrix> tuple_monomials(const MatrixTuple& t, unsigned max_degree);

/// p(T) = sum_alpha a_alpha T^alpha.
Matrix eval_polynomial(const PowerSeries& p, const MatrixTuple& t);

/// The compressions (P_N M_{z_1} P_N, ..., P_N M_{z_d} P_N) on degree <= N
/// polynomials: a commuting row contraction on which p(T) equals the
/// compression of M_p.
MatrixTuple shift_compressions(std::size_t d, unsigned cutoff);

}  // namespace pickwick
