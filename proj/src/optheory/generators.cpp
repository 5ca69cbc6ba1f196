#include "pickwick/optheory/generators.hpp"

#include <cmath>

namespace pickwick {

Complex random_complex(std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  return {g(rng), g(rng)};
}

Matrix random_unitary(std::mt19937_64& rng, Eigen::Index n) {
  Matrix g(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) g(i, j) = random_complex(rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(n, n);
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < n; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0.0) q.col(j) *= r(j, j) / mag;
  }
  return q;
}

Vector random_ball_vector(std::mt19937_64& rng, std::size_t d, double radius) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Vector v(static_cast<Eigen::Index>(d));
  for (auto& c : v) c = random_complex(rng);
  const double r = radius * std::pow(u(rng), 1.0 / (2.0 * static_cast<double>(d)));
  return v.normalized() * r;
}

MatrixTuple random_commuting_tuple(std::mt19937_64& rng, std::size_t d, Eigen::Index n, double row_norm_target,
                                   CommutingFamily family) {
  std::vector<Matrix> ms;
  if (family == CommutingFamily::Polynomial) {
    Matrix a = Matrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = i; j < n; ++j) a(i, j) = random_complex(rng);
    const Matrix a2 = a * a;
    for (std::size_t k = 0; k < d; ++k)
      ms.push_back(random_complex(rng) * Matrix::Identity(n, n) + random_complex(rng) * a + 0.3 * random_complex(rng) * a2);
  } else {
    Matrix s = Matrix::Identity(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) s(i, j) += 0.3 * random_complex(rng);
    const Matrix s_inv = s.inverse();
    for (std::size_t k = 0; k < d; ++k) {
      Vector diag(n);
      for (auto& c : diag) c = random_complex(rng);
      ms.push_back(s * diag.asDiagonal() * s_inv);
    }
  }
  MatrixTuple t(std::move(ms));
  const double r = row_norm(t);
  return r > 0.0 ? t.scaled(row_norm_target / r) : t;
}

}  // namespace pickwick
