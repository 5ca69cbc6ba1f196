#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "pickwick/core/linalg.hpp"
#include "pickwick/core/monomial_basis.hpp"
#include "pickwick/daspace/power_series.hpp"
#include "pickwick/kernel.hpp"

namespace pickwick {

/// P_N M_p |_{P_N} in the orthonormal basis e_alpha = z^alpha / ||z^alpha||,
/// rows and columns in graded-lex order over |alpha| <= N.
struct CompressionMatrix {
  unsigned degree_cutoff = 0;
  Matrix matrix;
};

CompressionMatrix compression(const PowerSeries& p, unsigned cutoff);

/// Compression of M_p mapping degree <= `from` into degree <= `to`
/// (rectangular when to > from). Columns follow MonomialBasis(d, from).
Matrix compression_between(const PowerSeries& p, unsigned from, unsigned to);

/// ||P_N M_p P_N||, a lower bound for the multiplier norm, nondecreasing in N.
double mult_norm_lower(const PowerSeries& p, unsigned cutoff);

/// M_{z_i}^* z^alpha = (alpha_i/|alpha|) z^{alpha - e_i}; nullopt when
/// alpha_i = 0. `i` is 0-based.
std::optional<std::pair<MultiIndex, Rational>> adjoint_monomial_apply(std::size_t i,
                                                                      const MultiIndex& alpha);

/// [k(z_i, z_j)(1 - phi_i conj(phi_j))].
Matrix mult_criterion_matrix(const std::vector<Complex>& phi_values, const std::vector<Point>& points,
                             const KernelCoefficients& kernel);

/// V_f(z) = 2 <f, K_z f> - ||f||^2, exact for polynomials.
Complex sarason_function(const PowerSeries& f, const Point& z);

/// Norm of the row [C_1 ... C_d] and of the column (C_1; ...; C_d) where
/// C_i = compression(z_i, N).
struct RowColumnNorms {
  double row = 0.0;
  double row_off_constants = 0.0;
  double column = 0.0;
};
RowColumnNorms coordinate_row_column_norms(std::size_t d, unsigned cutoff);

}  // namespace pickwick
