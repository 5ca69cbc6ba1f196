#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstddef>

namespace pickwick {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

namespace linalg {

/// Largest singular value (dense SVD).
double spectral_norm(const Matrix& m);

/// All singular values, descending.
RealVector singular_values(const Matrix& m);

/// (M + M*)/2.
Matrix hermitian_part(const Matrix& m);

double hermitian_defect(const Matrix& m);

/// Ascending eigenvalues of a Hermitian matrix.
RealVector hermitian_eigenvalues(const Matrix& m);

/// PSD square root; eigenvalues above -clamp are clipped to zero, eigenvalues
/// below -clamp leave `ok` false.
Matrix psd_sqrt(const Matrix& m, double clamp, bool* ok = nullptr);

/// Gram factor of a PSD matrix: returns H (rank x n) with H^* H = m, keeping
/// eigenvalues >= rel_cutoff * lambda_max. Column j of H is the vector h_j
/// with m(i, j) = <h_j, h_i> = h_i^* h_j.
Matrix gram_factor(const Matrix& m, double rel_cutoff);

/// Orthonormal basis of the range of m (columns), with numerical rank
/// decided against rel_cutoff * sigma_max.
Matrix range_basis(const Matrix& m, double rel_cutoff);

/// Orthonormal basis of the orthogonal complement of the column span of an
/// orthonormal q inside C^ambient.
Matrix complement_basis(const Matrix& q, Eigen::Index ambient);

/// Nearest matrix with orthonormal columns (polar factor).
Matrix orthonormalize(const Matrix& m);

double schatten_norm(const Matrix& m, double p);

}  // namespace linalg
}  // namespace pickwick
