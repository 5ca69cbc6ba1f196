#pragma once

#include <cstddef>
#include <vector>

#include "pickwick/core/linalg.hpp"
#include "pickwick/daspace/point.hpp"
#include "pickwick/kernel.hpp"
#include "pickwick/pick/psd.hpp"
#include "pickwick/pick/realization.hpp"

namespace pickwick {

struct PickProblem {
  std::size_t dimension = 1;
  std::vector<Point> nodes;
  /// r x r targets Lambda_i; scalar problems use 1 x 1 matrices.
  std::vector<Matrix> targets;
  KernelCoefficients kernel = KernelCoefficients::drury_arveson();

  static PickProblem scalar(std::size_t dimension, std::vector<Point> nodes,
                            const std::vector<Complex>& targets,
                            KernelCoefficients kernel = KernelCoefficients::drury_arveson());

  std::size_t target_size() const { return targets.empty() ? 1 : static_cast<std::size_t>(targets.front().rows()); }
  std::vector<Complex> scalar_targets() const;

  /// Throws on count mismatch, non-square or unequal targets, nodes outside
  /// the ball, dimension mismatch or repeated nodes.
  void validate() const;
};

/// [k(z_i, z_j)(I - Lambda_i Lambda_j^*)] as an (n r) x (n r) block matrix.
Matrix pick_matrix(const PickProblem& problem);

struct PickSolution {
  Realization realization;
  /// Points at which the realization reproduces the targets: the nodes
  /// themselves for the Drury-Arveson kernel, otherwise their images under
  /// the complete-Pick embedding.
  std::vector<Point> realization_nodes;
  bool embedded = false;
  std::size_t kolmogorov_rank = 0;
  double gram_residual = 0.0;
  double interpolation_residual = 0.0;
  PsdVerdict verdict;
};

/// Nevanlinna-Pick interpolation with transfer-function output.
///
/// Drury-Arveson kernels are solved directly. Other complete Pick kernels
/// are first embedded into a ball (am_embedding) and solved for the
/// Drury-Arveson kernel there. Throws NotPsd when the Pick matrix fails
/// psd_check, NotImplemented for matrix targets.
PickSolution solve_pick(const PickProblem& problem, double tol = kDefaultPsdTolerance);

/// max_i |phi(z_i) - lambda_i| for a scalar realization.
double interpolation_residual(const Realization& r, const std::vector<Point>& nodes,
                              const std::vector<Complex>& targets);

/// |(z - w)/(1 - z conj(w))| on the unit disc.
double pseudohyperbolic(Complex z, Complex w);

}  // namespace pickwick
