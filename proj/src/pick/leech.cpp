#include "pickwick/pick/leech.hpp"

#include <cmath>
#include <string>

#include "pickwick/error.hpp"

namespace pickwick {

namespace {

using Index = Eigen::Index;

void check_rows(const std::vector<Point>& nodes, const std::vector<Vector>& rows) {
  if (rows.size() != nodes.size()) throw Error(ErrorCode::LengthMismatch, "one row value per node is required");
  for (const auto& r : rows)
    if (r.size() != rows.front().size()) throw Error(ErrorCode::ShapeMismatch, "row values have different lengths");
  for (const auto& z : nodes) require_in_ball(z, "node");
}

}  // namespace

Matrix leech_matrix(const std::vector<Point>& nodes, const std::vector<Vector>& phi_rows,
                    const std::vector<Complex>& theta) {
  check_rows(nodes, phi_rows);
  if (theta.size() != nodes.size()) throw Error(ErrorCode::LengthMismatch, "one target per node is required");
  const Index n = static_cast<Index>(nodes.size());
  Matrix out(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      const auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
      const Complex phi = phi_rows[uj].dot(phi_rows[ui]);
      out(i, j) = (phi - theta[ui] * std::conj(theta[uj])) / (1.0 - inner(nodes[ui], nodes[uj]));
    }
  return linalg::hermitian_part(out);
}

Matrix column_criterion_matrix(const std::vector<Point>& nodes, const std::vector<Vector>& psi) {
  check_rows(nodes, psi);
  const Index n = static_cast<Index>(nodes.size());
  const Index m = n ? psi.front().size() : 0;
  Matrix out(n * m, n * m);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      const auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
      const Complex k = 1.0 / (1.0 - inner(nodes[ui], nodes[uj]));
      out.block(i * m, j * m, m, m) = k * (Matrix::Identity(m, m) - psi[ui] * psi[uj].adjoint());
    }
  return linalg::hermitian_part(out);
}

LeechSolution leech_solve(const std::vector<Point>& nodes, const std::vector<Vector>& phi_rows,
                          const std::vector<Complex>& theta, double tol) {
  const Matrix pm = leech_matrix(nodes, phi_rows, theta);
  LeechSolution out;
  out.verdict = psd_check(pm, tol);
  if (!out.verdict.is_psd)
    throw Error(ErrorCode::NotPsd, "Leech positivity matrix has eigenvalue " + std::to_string(out.verdict.min_eigenvalue));

  const Index n = static_cast<Index>(nodes.size());
  const Index m = n ? phi_rows.front().size() : 0;
  Matrix a(m, n), b(1, n);
  for (Index j = 0; j < n; ++j) {
    a.col(j) = phi_rows[static_cast<std::size_t>(j)].conjugate();
    b(0, j) = std::conj(theta[static_cast<std::size_t>(j)]);
  }
  LurkingIsometryResult li = lurking_isometry(nodes, pm, a, b);
  out.realization = std::move(li.realization);
  out.kolmogorov_rank = li.kolmogorov_rank;
  out.gram_residual = li.gram_residual;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    Vector psi = out.realization.eval(nodes[i]).col(0);
    const Complex lhs = phi_rows[i].cwiseProduct(psi).sum();
    out.residual = std::max(out.residual, std::abs(lhs - theta[i]));
    out.psi_values.push_back(std::move(psi));
  }
  return out;
}

CoronaSolution corona_solve(const std::vector<Point>& nodes, const std::vector<Vector>& phi_rows, double delta,
                            double tol) {
  if (!(delta > 0.0)) throw Error(ErrorCode::InvalidArgument, "corona lower bound delta must be positive");
  const std::vector<Complex> theta(nodes.size(), Complex(delta, 0.0));
  LeechSolution leech = leech_solve(nodes, phi_rows, theta, tol);
  CoronaSolution out;
  out.delta = delta;
  out.column_norm_bound = 1.0 / delta;
  out.verdict = leech.verdict;
  out.realization = std::move(leech.realization);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    Vector psi = leech.psi_values[i] / delta;
    const Complex lhs = phi_rows[i].cwiseProduct(psi).sum();
    out.residual = std::max(out.residual, std::abs(lhs - 1.0));
    out.psi_values.push_back(std::move(psi));
  }
  return out;
}

}  // namespace pickwick
