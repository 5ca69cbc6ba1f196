#include "pickwick/optheory/dilation.hpp"

#include <algorithm>
#include <cmath>

#include "pickwick/core/monomial_basis.hpp"
#include "pickwick/error.hpp"
#include "pickwick/multiplier/multiplier.hpp"

namespace pickwick {

Matrix dilation_isometry(const MatrixTuple& t, unsigned cutoff) {
  t.require_commuting();
  const Matrix delta = defect_root(t);
  const MonomialBasis basis(t.dimension(), cutoff);
  const std::vector<Matrix> powers = tuple_monomials(t.adjoint(), cutoff);
  const Eigen::Index n = t.size();
  Matrix v(static_cast<Eigen::Index>(basis.size()) * n, n);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const double weight = 1.0 / basis.norms()[k];
    v.middleRows(static_cast<Eigen::Index>(k) * n, n) = weight * delta * powers[k];
  }
  return v;
}

std::vector<double> intertwine_residual(const MatrixTuple& t, const Matrix& v, unsigned cutoff) {
  const MonomialBasis basis(t.dimension(), cutoff);
  const Eigen::Index n = t.size();
  if (v.cols() != n || v.rows() != static_cast<Eigen::Index>(basis.size()) * n)
    throw Error(ErrorCode::ShapeMismatch, "dilation matrix has the wrong shape");
  std::vector<double> out;
  if (cutoff == 0) {
    out.assign(t.dimension(), 0.0);
    return out;
  }
  const std::size_t inner = basis.degree_offset(cutoff);
  const Eigen::Index rows = static_cast<Eigen::Index>(inner) * n;
  for (std::size_t i = 0; i < t.dimension(); ++i) {
    Matrix lhs(rows, n);
    for (std::size_t k = 0; k < inner; ++k) {
      const MultiIndex& beta = basis[k];
      const MultiIndex up = beta.incremented(i);
      const double w = std::sqrt(static_cast<double>(up[i]) / static_cast<double>(up.degree()));
      lhs.middleRows(static_cast<Eigen::Index>(k) * n, n) =
          w * v.middleRows(static_cast<Eigen::Index>(*basis.index_of(up)) * n, n);
    }
    const Matrix rhs = v.topRows(rows) * t[i].adjoint();
    out.push_back(linalg::spectral_norm(lhs - rhs));
  }
  return out;
}

DilationReport dilation_report(const MatrixTuple& t, unsigned cutoff) {
  DilationReport r;
  r.cutoff = cutoff;
  r.row_norm = t.row_norm();
  const Matrix v = dilation_isometry(t, cutoff);
  r.isometry_defect = linalg::spectral_norm(v.adjoint() * v - Matrix::Identity(t.size(), t.size()));
  r.intertwining_residual = intertwine_residual(t, v, cutoff);
  r.purity_tail = linalg::spectral_norm(theta_power(t, cutoff + 1));
  return r;
}

VnReport vn_report(const MatrixTuple& t, const PowerSeries& p, unsigned cutoff) {
  t.require_commuting();
  const double r = t.row_norm();
  if (r > 1.0 + 1e-12) throw Error(ErrorCode::NotRowContraction, "row norm " + std::to_string(r));
  VnReport rep;
  rep.lhs = linalg::spectral_norm(eval_polynomial(p, t));
  for (unsigned k = 0; k <= cutoff; ++k) rep.rhs_curve.push_back(mult_norm_lower(p, k));
  const double last = rep.rhs_curve.back();
  if (rep.lhs <= last + rep.tolerance) {
    rep.verdict = VnVerdict::Satisfied;
  } else {
    const bool stable = cutoff > 0 && std::abs(last - rep.rhs_curve[cutoff - 1]) < 1e-10;
    rep.verdict = stable ? VnVerdict::Violation : VnVerdict::Inconclusive;
  }
  return rep;
}

const char* to_string(VnVerdict v) {
  switch (v) {
    case VnVerdict::Satisfied: return "satisfied";
    case VnVerdict::Violation: return "violation";
    case VnVerdict::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

}  // namespace pickwick
