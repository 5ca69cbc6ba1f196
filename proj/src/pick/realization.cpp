#include "pickwick/pick/realization.hpp"

#include <string>

#include "pickwick/error.hpp"

namespace pickwick {

namespace {

using Index = Eigen::Index;

Index as_index(std::size_t n) { return static_cast<Index>(n); }

}  // namespace

Matrix Realization::colligation() const {
  const Index e = as_index(state_dim);
  const Index top = as_index(dimension) * e;
  Matrix u(top + as_index(output_dim), e + as_index(input_dim));
  u.topLeftCorner(top, e) = a;
  u.topRightCorner(top, as_index(input_dim)) = b;
  u.bottomLeftCorner(as_index(output_dim), e) = c;
  u.bottomRightCorner(as_index(output_dim), as_index(input_dim)) = d;
  return u;
}

double Realization::isometry_residual() const {
  const Matrix u = colligation();
  return linalg::spectral_norm(u.adjoint() * u - Matrix::Identity(u.cols(), u.cols()));
}

double Realization::coisometry_residual() const {
  const Matrix u = colligation();
  return linalg::spectral_norm(u * u.adjoint() - Matrix::Identity(u.rows(), u.rows()));
}

double Realization::unitarity_residual() const {
  const double iso = isometry_residual();
  return is_square() ? std::max(iso, coisometry_residual()) : iso;
}

Matrix Realization::eval(const Point& z) const {
  require_in_ball(z, "evaluation point");
  if (z.dimension() != dimension) throw Error(ErrorCode::DimensionMismatch, "realization evaluated at wrong dimension");
  const Index e = as_index(state_dim);
  if (e == 0) return d;
  Matrix za = Matrix::Zero(e, e);
  Matrix zb = Matrix::Zero(e, as_index(input_dim));
  for (std::size_t k = 0; k < dimension; ++k) {
    za += z[k] * a.middleRows(as_index(k) * e, e);
    zb += z[k] * b.middleRows(as_index(k) * e, e);
  }
  const Matrix state = (Matrix::Identity(e, e) - za).partialPivLu().solve(zb);
  return d + c * state;
}

Complex realization_eval(const Realization& r, const Point& z) {
  if (r.output_dim != 1 || r.input_dim != 1)
    throw Error(ErrorCode::ShapeMismatch, "scalar evaluation of a matrix-valued realization");
  return r.eval(z)(0, 0);
}

LurkingIsometryResult lurking_isometry(const std::vector<Point>& nodes, const Matrix& pick, const Matrix& a,
                                       const Matrix& b) {
  const Index n = as_index(nodes.size());
  if (pick.rows() != n || pick.cols() != n || a.cols() != n || b.cols() != n)
    throw Error(ErrorCode::ShapeMismatch, "lurking isometry data sizes disagree");
  const std::size_t d = nodes.empty() ? 1 : nodes.front().dimension();
  const Index m = a.rows();
  const Index p = b.rows();

  // Kolmogorov factor: pick(i, j) = h_i^* h_j.
  const Matrix h = linalg::gram_factor(pick, kKolmogorovCutoff);
  const Index e = h.rows();

  // u_j = (conj(z_j1) h_j, ..., conj(z_jd) h_j, a_j), v_j = (h_j, b_j).
  const Index du = as_index(d) * e + m;
  const Index dv = e + p;
  Matrix u(du, n), v(dv, n);
  for (Index j = 0; j < n; ++j) {
    const Point& z = nodes[static_cast<std::size_t>(j)];
    for (std::size_t k = 0; k < d; ++k) u.block(as_index(k) * e, j, e, 1) = std::conj(z[k]) * h.col(j);
    u.block(as_index(d) * e, j, m, 1) = a.col(j);
    v.block(0, j, e, 1) = h.col(j);
    v.block(e, j, p, 1) = b.col(j);
  }

  const Matrix gu = u.adjoint() * u;
  const Matrix gv = v.adjoint() * v;
  const double scale = std::max(1.0, gu.cwiseAbs().maxCoeff());
  const double gram_residual = (gu - gv).cwiseAbs().maxCoeff();
  if (gram_residual > kGramTolerance * scale)
    throw Error(ErrorCode::GramMismatch, "lurking isometry Gram identity off by " + std::to_string(gram_residual));

  // Isometry span{u_j} -> span{v_j}: with u = Qu S R^*, the images of the
  // columns of Qu are v R S^{-1}; re-orthonormalize against rounding.
  Matrix w = Matrix::Zero(dv, du);
  Matrix qu(du, 0), qv(dv, 0);
  if (n > 0) {
    Eigen::JacobiSVD<Matrix> svd(u, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const RealVector& s = svd.singularValues();
    Index rank = 0;
    while (rank < s.size() && s(rank) > 1e-10 * s(0)) ++rank;
    qu = svd.matrixU().leftCols(rank);
    qv = linalg::orthonormalize(v * svd.matrixV().leftCols(rank) * s.head(rank).cwiseInverse().asDiagonal());
    w = qv * qu.adjoint();
  }
  // Extend to a partial isometry that maps onto all of C^{e+p}.
  const Matrix cu = linalg::complement_basis(qu, du);
  const Matrix cv = linalg::complement_basis(qv, dv);
  const Index extra = std::min(cu.cols(), cv.cols());
  w += cv.leftCols(extra) * cu.leftCols(extra).adjoint();

  // U = W^* : E (+) C^p -> E^d (+) C^m.
  const Matrix colligation = w.adjoint();
  LurkingIsometryResult out;
  Realization& r = out.realization;
  r.dimension = d;
  r.state_dim = static_cast<std::size_t>(e);
  r.input_dim = static_cast<std::size_t>(p);
  r.output_dim = static_cast<std::size_t>(m);
  const Index top = as_index(d) * e;
  r.a = colligation.topLeftCorner(top, e);
  r.b = colligation.topRightCorner(top, p);
  r.c = colligation.bottomLeftCorner(m, e);
  r.d = colligation.bottomRightCorner(m, p);
  out.kolmogorov_rank = static_cast<std::size_t>(e);
  out.gram_residual = gram_residual;
  return out;
}

}  // namespace pickwick
