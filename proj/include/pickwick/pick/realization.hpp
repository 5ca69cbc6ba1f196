#pragma once

#include <cstddef>
#include <vector>

#include "pickwick/core/linalg.hpp"
#include "pickwick/daspace/point.hpp"

namespace pickwick {

/// Colligation U = [[A, B], [C, D]] : E (+) C^p -> E^d (+) C^m with transfer
/// function Psi(z) = D + C (I - Z(z) A)^{-1} Z(z) B, Z(z) = [z_1 I ... z_d I].
///
/// A is stored as d stacked blocks A_k (each e x e), B likewise (each e x p),
/// so Z(z) A = sum_k z_k A_k.
struct Realization {
  std::size_t dimension = 1;
  std::size_t state_dim = 0;
  std::size_t input_dim = 1;
  std::size_t output_dim = 1;
  Matrix a;
  Matrix b;
  Matrix c;
  Matrix d;

  Matrix colligation() const;
  /// ||U^* U - I||.
  double isometry_residual() const;
  /// ||U U^* - I||; only defined when U is square (d = 1 and m = p).
  double coisometry_residual() const;
  bool is_square() const { return dimension * state_dim + output_dim == state_dim + input_dim; }
  /// max of the isometry residual and, when square, the co-isometry residual.
  double unitarity_residual() const;

  /// Psi(z) as an m x p matrix. Throws PointOutsideBall.
  Matrix eval(const Point& z) const;
};

/// Scalar transfer function value (m = p = 1).
Complex realization_eval(const Realization& r, const Point& z);

struct LurkingIsometryResult {
  Realization realization;
  std::size_t kolmogorov_rank = 0;
  double gram_residual = 0.0;
};

/// Lurking-isometry construction. Given nodes z_j, a PSD matrix P and
/// vectors a_j (m), b_j (p) with
///   P_ij (1 - <z_i, z_j>) = a_i^* a_j - b_i^* b_j,
/// returns an isometric colligation whose transfer function satisfies
/// a_j^* Psi(z_j) = b_j^*.
///
/// `a` is m x n and `b` is p x n (column j belongs to node j).
LurkingIsometryResult lurking_isometry(const std::vector<Point>& nodes, const Matrix& pick,
                                       const Matrix& a, const Matrix& b);

inline constexpr double kKolmogorovCutoff = 1e-12;
inline constexpr double kGramTolerance = 1e-8;

}  // namespace pickwick
