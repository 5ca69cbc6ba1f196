#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pickwick/core/linalg.hpp"
#include "pickwick/core/rational.hpp"
#include "pickwick/kernel.hpp"
#include "pickwick/pick/psd.hpp"
#include "pickwick/pick/realization.hpp"

namespace pickwick {

/// Coefficients c_0, ..., c_N of 1 - 1/k, via b_0 = 1,
/// b_n = -sum_{j=1..n} a_j b_{n-j}, c_n = -b_n (c_0 = 0).
std::vector<double> one_minus_reciprocal_coeffs(const KernelCoefficients& k, std::size_t max_index);
std::vector<Rational> one_minus_reciprocal_coeffs(const std::vector<Rational>& a);

struct CompletePickVerdict {
  bool pass = false;
  std::optional<std::size_t> first_violation;
  std::vector<double> c;
  /// Threshold applied at each index: tol * (1 + sum_j |a_j b_{n-j}|).
  std::vector<double> tolerance_used;
  double min_coefficient = 0.0;
  /// Kaluza sub-check needs every a_n > 0.
  bool kaluza_applicable = false;
  /// a_n^2 <= a_{n-1} a_{n+1} for 1 <= n < N.
  bool log_convex = false;
};

CompletePickVerdict classify_complete_pick(const KernelCoefficients& k, std::size_t max_index,
                                           double tol = 1e-12);

struct Embedding {
  /// Column i is b(x_i); rank rows (at least one row, zero when rank is 0).
  Matrix vectors;
  std::size_t rank = 0;
  /// max |1/(1 - <b_i, b_j>) - K_ij|.
  double reconstruction_residual = 0.0;
  PsdVerdict verdict;
};

/// Ball embedding of a normalized complete Pick kernel matrix:
/// K_ij = 1/(1 - <b_i, b_j>). Row/column `normalization_index` must be 1.
Embedding am_embedding(const Matrix& kernel_matrix, std::size_t normalization_index = 0,
                       double tol = kDefaultPsdTolerance);

}  // namespace pickwick
