#pragma once

#include <vector>

#include "pickwick/core/linalg.hpp"
#include "pickwick/daspace/point.hpp"
#include "pickwick/pick/psd.hpp"
#include "pickwick/pick/realization.hpp"

namespace pickwick {

/// [k(z_i, z_j)(Phi_i Phi_j^* - Theta_i conj(Theta_j))] for the
/// Drury-Arveson kernel. Each Phi_i is given as the vector of its m entries.
Matrix leech_matrix(const std::vector<Point>& nodes, const std::vector<Vector>& phi_rows,
                    const std::vector<Complex>& theta);

/// [k(z_i, z_j)(I_m - Psi_i Psi_j^*)] for column values Psi_i in C^m;
/// PSD iff the column multiplier is contractive on the nodes.
Matrix column_criterion_matrix(const std::vector<Point>& nodes, const std::vector<Vector>& psi);

struct LeechSolution {
  /// Psi(z_i) in C^m.
  std::vector<Vector> psi_values;
  /// Column transfer function: output_dim = m, input_dim = 1.
  Realization realization;
  std::size_t kolmogorov_rank = 0;
  double gram_residual = 0.0;
  /// max_i |Phi_i Psi_i - Theta_i|.
  double residual = 0.0;
  PsdVerdict verdict;
};

/// Finite-node Leech factorization Phi Psi = Theta with a contractive column
/// multiplier Psi. Throws NotPsd when leech_matrix fails psd_check.
LeechSolution leech_solve(const std::vector<Point>& nodes, const std::vector<Vector>& phi_rows,
                          const std::vector<Complex>& theta, double tol = kDefaultPsdTolerance);

struct CoronaSolution {
  double delta = 0.0;
  /// Psi(z_i) rescaled so that sum_j phi_j(z_i) psi_j(z_i) = 1.
  std::vector<Vector> psi_values;
  Realization realization;
  /// Multiplier norm bound of the returned column: 1/delta.
  double column_norm_bound = 0.0;
  double residual = 0.0;
  PsdVerdict verdict;
};

/// Toeplitz corona reduction on a finite node set: solve Phi Psi = delta
/// contractively, then rescale by 1/delta.
CoronaSolution corona_solve(const std::vector<Point>& nodes, const std::vector<Vector>& phi_rows,
                            double delta, double tol = kDefaultPsdTolerance);

}  // namespace pickwick
