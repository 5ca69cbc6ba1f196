#include "pickwick/multiplier/multiplier.hpp"

#include <cmath>

#include "pickwick/daspace/daspace.hpp"
#include "pickwick/error.hpp"

namespace pickwick {

Matrix compression_between(const PowerSeries& p, unsigned from, unsigned to) {
  const std::size_t d = p.dimension();
  const MonomialBasis domain(d, from);
  const MonomialBasis range(d, to);
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(range.size()), static_cast<Eigen::Index>(domain.size()));
  for (std::size_t col = 0; col < domain.size(); ++col) {
    const MultiIndex& beta = domain[col];
    for (const auto& [shift, c] : p) {
      const MultiIndex gamma = beta + shift;
      if (gamma.degree() > to) continue;
      const std::size_t row = *range.index_of(gamma);
      m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) +=
          c * (range.norms()[row] / domain.norms()[col]);
    }
  }
  return m;
}

CompressionMatrix compression(const PowerSeries& p, unsigned cutoff) {
  return CompressionMatrix{cutoff, compression_between(p, cutoff, cutoff)};
}

double mult_norm_lower(const PowerSeries& p, unsigned cutoff) {
  return linalg::spectral_norm(compression(p, cutoff).matrix);
}

std::optional<std::pair<MultiIndex, Rational>> adjoint_monomial_apply(std::size_t i, const MultiIndex& alpha) {
  if (i >= alpha.dimension()) throw Error(ErrorCode::InvalidArgument, "coordinate index out of range");
  if (alpha[i] == 0) return std::nullopt;
  return std::make_pair(alpha.decremented(i), make_rational(alpha[i], alpha.degree()));
}

Matrix mult_criterion_matrix(const std::vector<Complex>& phi_values, const std::vector<Point>& points,
                             const KernelCoefficients& kernel) {
  if (phi_values.size() != points.size())
    throw Error(ErrorCode::LengthMismatch, "one multiplier value per point is required");
  Matrix k = kernel.gram(points);
  const auto n = static_cast<Eigen::Index>(points.size());
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      k(i, j) *= 1.0 - phi_values[static_cast<std::size_t>(i)] * std::conj(phi_values[static_cast<std::size_t>(j)]);
  return linalg::hermitian_part(k);
}

Complex sarason_function(const PowerSeries& f, const Point& z) {
  const unsigned n = f.degree();
  const PowerSeries kz_f = (kernel_coeffs(z, n) * f).truncated(n);
  return 2.0 * da_inner(f, kz_f) - da_norm_sq(f);
}

RowColumnNorms coordinate_row_column_norms(std::size_t d, unsigned cutoff) {
  const MonomialBasis basis(d, cutoff);
  const auto dim = static_cast<Eigen::Index>(basis.size());
  Matrix row_gram = Matrix::Zero(dim, dim);
  Matrix column_gram = Matrix::Zero(dim, dim);
  for (std::size_t i = 0; i < d; ++i) {
    const Matrix c = compression(PowerSeries::coordinate(d, i), cutoff).matrix;
    row_gram += c * c.adjoint();
    column_gram += c.adjoint() * c;
  }
  RowColumnNorms out;
  out.row = std::sqrt(linalg::spectral_norm(row_gram));
  out.row_off_constants = dim > 1 ? std::sqrt(linalg::spectral_norm(row_gram.bottomRightCorner(dim - 1, dim - 1))) : 0.0;
  out.column = std::sqrt(linalg::spectral_norm(column_gram));
  return out;
}

}  // namespace pickwick
