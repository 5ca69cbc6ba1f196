#include "pickwick/optheory/matrix_tuple.hpp"

#include <algorithm>
#include <cmath>

#include "pickwick/core/monomial_basis.hpp"
#include "pickwick/error.hpp"
#include "pickwick/multiplier/multiplier.hpp"

namespace pickwick {

MatrixTuple::MatrixTuple(std::vector<Matrix> matrices) : matrices_(std::move(matrices)) {
  if (matrices_.empty()) throw Error(ErrorCode::SizeMismatch, "matrix tuple needs at least one matrix");
  const Eigen::Index n = matrices_.front().rows();
  for (const auto& m : matrices_)
    if (m.rows() != n || m.cols() != n)
      throw Error(ErrorCode::SizeMismatch, "tuple matrices must be square of equal size");
}

double MatrixTuple::commutator_defect() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < matrices_.size(); ++i)
    for (std::size_t j = i + 1; j < matrices_.size(); ++j)
      worst = std::max(worst, linalg::spectral_norm(matrices_[i] * matrices_[j] - matrices_[j] * matrices_[i]));
  return worst;
}

double MatrixTuple::commuting_tolerance() const {
  double top = 0.0;
  for (const auto& m : matrices_) top = std::max(top, linalg::spectral_norm(m));
  return 1e-10 * (1.0 + top * top);
}

bool MatrixTuple::is_commuting() const { return commutator_defect() <= commuting_tolerance(); }

void MatrixTuple::require_commuting() const {
  if (commuting_checked_) return;
  if (!is_commuting())
    throw Error(ErrorCode::NotCommuting, "commutator defect " + std::to_string(commutator_defect()));
  commuting_checked_ = true;
}

double MatrixTuple::row_norm() const {
  if (!row_norm_) row_norm_ = pickwick::row_norm(*this);
  return *row_norm_;
}

MatrixTuple MatrixTuple::scaled(double s) const {
  std::vector<Matrix> out;
  for (const auto& m : matrices_) out.push_back(s * m);
  return MatrixTuple(std::move(out));
}

MatrixTuple MatrixTuple::adjoint() const {
  std::vector<Matrix> out;
  for (const auto& m : matrices_) out.push_back(m.adjoint());
  return MatrixTuple(std::move(out));
}

double row_norm(const MatrixTuple& t) {
  Matrix acc = Matrix::Zero(t.size(), t.size());
  for (const auto& m : t.matrices()) acc += m * m.adjoint();
  const RealVector ev = linalg::hermitian_eigenvalues(acc);
  return ev.size() ? std::sqrt(std::max(ev(ev.size() - 1), 0.0)) : 0.0;
}

Matrix theta_apply(const MatrixTuple& t, const Matrix& a) {
  if (a.rows() != t.size() || a.cols() != t.size())
    throw Error(ErrorCode::SizeMismatch, "theta argument has the wrong size");
  Matrix acc = Matrix::Zero(t.size(), t.size());
  for (const auto& m : t.matrices()) acc += m * a * m.adjoint();
  return linalg::hermitian_part(acc);
}

Matrix theta_power(const MatrixTuple& t, unsigned k) {
  Matrix a = Matrix::Identity(t.size(), t.size());
  for (unsigned s = 0; s < k; ++s) a = theta_apply(t, a);
  return a;
}

Matrix defect_root(const MatrixTuple& t) {
  const double r = t.row_norm();
  if (r > 1.0 + 1e-12) throw Error(ErrorCode::NotRowContraction, "row norm " + std::to_string(r));
  const Matrix id = Matrix::Identity(t.size(), t.size());
  return linalg::psd_sqrt(id - theta_apply(t, id), 1e-12);
}

std::vector<Matrix> tuple_monomials(const MatrixTuple& t, unsigned max_degree) {
  const MonomialBasis basis(t.dimension(), max_degree);
  std::vector<Matrix> out;
  out.reserve(basis.size());
  out.push_back(Matrix::Identity(t.size(), t.size()));
  for (std::size_t k = 1; k < basis.size(); ++k) {
    const MultiIndex& alpha = basis[k];
    std::size_t i = 0;
    while (alpha[i] == 0) ++i;
    out.push_back(out[*basis.index_of(alpha.decremented(i))] * t[i]);
  }
  return out;
}

Matrix eval_polynomial(const PowerSeries& p, const MatrixTuple& t) {
  if (p.dimension() != t.dimension()) throw Error(ErrorCode::DimensionMismatch, "polynomial and tuple dimensions");
  const MonomialBasis basis(t.dimension(), p.degree());
  const std::vector<Matrix> powers = tuple_monomials(t, p.degree());
  Matrix acc = Matrix::Zero(t.size(), t.size());
  for (const auto& [alpha, c] : p) acc += c * powers[*basis.index_of(alpha)];
  return acc;
}

MatrixTuple shift_compressions(std::size_t d, unsigned cutoff) {
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < d; ++i) out.push_back(compression(PowerSeries::coordinate(d, i), cutoff).matrix);
  return MatrixTuple(std::move(out));
}

}  // namespace pickwick
