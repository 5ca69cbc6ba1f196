#include "pickwick/pick/classify.hpp"

#include <cmath>
#include <string>

#include "pickwick/error.hpp"

namespace pickwick {

namespace {

struct Recurrence {
  std::vector<double> c;
  std::vector<double> magnitude;
};

Recurrence reciprocal_recurrence(const std::vector<double>& a) {
  const std::size_t n_max = a.size() - 1;
  std::vector<double> b(n_max + 1, 0.0);
  Recurrence out{std::vector<double>(n_max + 1, 0.0), std::vector<double>(n_max + 1, 0.0)};
  b[0] = 1.0;
  for (std::size_t n = 1; n <= n_max; ++n) {
    double acc = 0.0, mag = 0.0;
    for (std::size_t j = 1; j <= n; ++j) {
      const double t = a[j] * b[n - j];
      acc += t;
      mag += std::abs(t);
    }
    b[n] = -acc;
    out.c[n] = acc;
    out.magnitude[n] = mag;
  }
  return out;
}

}  // namespace

std::vector<double> one_minus_reciprocal_coeffs(const KernelCoefficients& k, std::size_t max_index) {
  return reciprocal_recurrence(k.coefficients(max_index)).c;
}

std::vector<Rational> one_minus_reciprocal_coeffs(const std::vector<Rational>& a) {
  if (a.empty() || a.front() != 1) throw Error(ErrorCode::NotNormalized, "a_0 must be 1");
  const std::size_t n_max = a.size() - 1;
  std::vector<Rational> b(n_max + 1), c(n_max + 1);
  b[0] = 1;
  c[0] = 0;
  for (std::size_t n = 1; n <= n_max; ++n) {
    Rational acc = 0;
    for (std::size_t j = 1; j <= n; ++j) acc += a[j] * b[n - j];
    b[n] = -acc;
    c[n] = acc;
  }
  return c;
}

CompletePickVerdict classify_complete_pick(const KernelCoefficients& k, std::size_t max_index, double tol) {
  const std::vector<double> a = k.coefficients(max_index);
  if (a.front() != 1.0) throw Error(ErrorCode::NotNormalized, "a_0 must be 1");
  const Recurrence rec = reciprocal_recurrence(a);

  CompletePickVerdict v;
  v.c = rec.c;
  v.tolerance_used.resize(rec.c.size(), 0.0);
  v.pass = true;
  v.min_coefficient = 0.0;
  for (std::size_t n = 1; n < rec.c.size(); ++n) {
    v.tolerance_used[n] = tol * (1.0 + rec.magnitude[n]);
    v.min_coefficient = n == 1 ? rec.c[n] : std::min(v.min_coefficient, rec.c[n]);
    if (rec.c[n] < -v.tolerance_used[n] && v.pass) {
      v.pass = false;
      v.first_violation = n;
    }
  }

  v.kaluza_applicable = true;
  for (double x : a)
    if (!(x > 0.0)) v.kaluza_applicable = false;
  if (v.kaluza_applicable) {
    v.log_convex = true;
    for (std::size_t n = 1; n < max_index; ++n) {
      const double lhs = a[n] * a[n];
      const double rhs = a[n - 1] * a[n + 1];
      if (lhs > rhs * (1.0 + 1e-14)) {
        v.log_convex = false;
        break;
      }
    }
  }
  return v;
}

Embedding am_embedding(const Matrix& kernel_matrix, std::size_t normalization_index, double tol) {
  const Eigen::Index n = kernel_matrix.rows();
  if (kernel_matrix.cols() != n) throw Error(ErrorCode::ShapeMismatch, "kernel matrix must be square");
  const auto z = static_cast<Eigen::Index>(normalization_index);
  if (z >= n) throw Error(ErrorCode::InvalidArgument, "normalization index out of range");
  for (Eigen::Index i = 0; i < n; ++i)
    if (std::abs(kernel_matrix(i, z) - 1.0) > 1e-10 || std::abs(kernel_matrix(z, i) - 1.0) > 1e-10)
      throw Error(ErrorCode::NotNormalized, "kernel is not normalized at index " + std::to_string(normalization_index));

  Matrix e(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      const Complex kij = kernel_matrix(i, j);
      if (std::abs(kij) < 1e-300) throw Error(ErrorCode::ZeroKernelEntry, "kernel vanishes at an entry");
      e(i, j) = 1.0 - 1.0 / kij;
    }
  e = linalg::hermitian_part(e);

  Embedding out;
  out.verdict = psd_check(e, tol);
  if (!out.verdict.is_psd)
    throw Error(ErrorCode::NotCompletePick, "1 - 1/k has eigenvalue " + std::to_string(out.verdict.min_eigenvalue));

  // <b_i, b_j> = b_j^* b_i = e(i, j), so the Gram factor of conj(e) gives the b_i.
  Matrix b = linalg::gram_factor(e.conjugate(), kKolmogorovCutoff);
  out.rank = static_cast<std::size_t>(b.rows());
  if (b.rows() == 0) b = Matrix::Zero(1, n);
  out.vectors = b;

  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      const Complex ip = b.col(j).dot(b.col(i));
      out.reconstruction_residual = std::max(out.reconstruction_residual, std::abs(1.0 / (1.0 - ip) - kernel_matrix(i, j)));
    }
  return out;
}

}  // namespace pickwick
