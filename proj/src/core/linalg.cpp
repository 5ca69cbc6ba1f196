#include "pickwick/core/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace pickwick::linalg {

RealVector singular_values(const Matrix& m) {
  if (m.size() == 0) return RealVector();
  Eigen::BDCSVD<Matrix> svd(m);
  return svd.singularValues();
}

double spectral_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  return singular_values(m)(0);
}

Matrix hermitian_part(const Matrix& m) { return (m + m.adjoint()) / 2.0; }

double hermitian_defect(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

RealVector hermitian_eigenvalues(const Matrix& m) {
  if (m.size() == 0) return RealVector();
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian_part(m), Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

Matrix psd_sqrt(const Matrix& m, double clamp, bool* ok) {
  if (ok) *ok = true;
  if (m.size() == 0) return m;
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian_part(m));
  RealVector ev = es.eigenvalues();
  for (Eigen::Index k = 0; k < ev.size(); ++k) {
    if (ev(k) < -clamp && ok) *ok = false;
    ev(k) = std::sqrt(std::max(ev(k), 0.0));
  }
  return es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
}

Matrix gram_factor(const Matrix& m, double rel_cutoff) {
  const Eigen::Index n = m.rows();
  if (n == 0) return Matrix(0, 0);
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian_part(m));
  const RealVector& ev = es.eigenvalues();
  const double top = std::max(ev(n - 1), 0.0);
  std::vector<Eigen::Index> keep;
  for (Eigen::Index k = n; k-- > 0;)
    if (top > 0.0 && ev(k) >= rel_cutoff * top) keep.push_back(k);
  Matrix h(static_cast<Eigen::Index>(keep.size()), n);
  for (std::size_t r = 0; r < keep.size(); ++r) {
    const Eigen::Index k = keep[r];
    h.row(static_cast<Eigen::Index>(r)) = std::sqrt(ev(k)) * es.eigenvectors().col(k).adjoint();
  }
  return h;
}

Matrix range_basis(const Matrix& m, double rel_cutoff) {
  if (m.size() == 0) return Matrix(m.rows(), 0);
  Eigen::BDCSVD<Matrix> svd(m, Eigen::ComputeThinU);
  const RealVector& s = svd.singularValues();
  Eigen::Index rank = 0;
  while (rank < s.size() && s(rank) > rel_cutoff * s(0)) ++rank;
  return svd.matrixU().leftCols(rank);
}

Matrix complement_basis(const Matrix& q, Eigen::Index ambient) {
  const Eigen::Index r = q.cols();
  if (r == 0) return Matrix::Identity(ambient, ambient);
  Eigen::HouseholderQR<Matrix> qr(q);
  Matrix full = qr.householderQ() * Matrix::Identity(ambient, ambient);
  return full.rightCols(ambient - r);
}

Matrix orthonormalize(const Matrix& m) {
  if (m.cols() == 0) return m;
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

double schatten_norm(const Matrix& m, double p) {
  RealVector s = singular_values(m);
  double acc = 0.0;
  for (Eigen::Index k = 0; k < s.size(); ++k) acc += std::pow(s(k), p);
  return std::pow(acc, 1.0 / p);
}

}  // namespace pickwick::linalg
