#include "pickwick/pick/pick.hpp"

#include <cmath>
#include <string>

#include "pickwick/error.hpp"
#include "pickwick/pick/classify.hpp"

namespace pickwick {

namespace {

using Index = Eigen::Index;

}  // namespace

PickProblem PickProblem::scalar(std::size_t dimension, std::vector<Point> nodes, const std::vector<Complex>& targets,
                                KernelCoefficients kernel) {
  PickProblem p;
  p.dimension = dimension;
  p.nodes = std::move(nodes);
  p.kernel = std::move(kernel);
  for (const Complex& t : targets) p.targets.push_back(Matrix::Constant(1, 1, t));
  return p;
}

std::vector<Complex> PickProblem::scalar_targets() const {
  std::vector<Complex> out;
  for (const auto& t : targets) {
    if (t.rows() != 1 || t.cols() != 1) throw Error(ErrorCode::NotImplemented, "matrix-valued targets");
    out.push_back(t(0, 0));
  }
  return out;
}

void PickProblem::validate() const {
  if (nodes.size() != targets.size())
    throw Error(ErrorCode::LengthMismatch, std::to_string(nodes.size()) + " nodes but " +
                                               std::to_string(targets.size()) + " targets");
  const Index r = static_cast<Index>(target_size());
  for (const auto& t : targets)
    if (t.rows() != r || t.cols() != r) throw Error(ErrorCode::ShapeMismatch, "targets must be r x r with common r");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].dimension() != dimension)
      throw Error(ErrorCode::DimensionMismatch, "node " + std::to_string(i) + " has the wrong dimension");
    require_in_ball(nodes[i], "node");
    for (std::size_t j = 0; j < i; ++j)
      if ((nodes[i].coords() - nodes[j].coords()).norm() == 0.0)
        throw Error(ErrorCode::InvalidArgument, "nodes " + std::to_string(j) + " and " + std::to_string(i) + " coincide");
  }
}

Matrix pick_matrix(const PickProblem& problem) {
  problem.validate();
  const Index n = static_cast<Index>(problem.nodes.size());
  const Index r = static_cast<Index>(problem.target_size());
  const Matrix k = problem.kernel.gram(problem.nodes);
  Matrix out(n * r, n * r);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      const Matrix& li = problem.targets[static_cast<std::size_t>(i)];
      const Matrix& lj = problem.targets[static_cast<std::size_t>(j)];
      out.block(i * r, j * r, r, r) = k(i, j) * (Matrix::Identity(r, r) - li * lj.adjoint());
    }
  return linalg::hermitian_part(out);
}

double interpolation_residual(const Realization& r, const std::vector<Point>& nodes,
                              const std::vector<Complex>& targets) {
  double worst = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i)
    worst = std::max(worst, std::abs(realization_eval(r, nodes[i]) - targets[i]));
  return worst;
}

namespace {

PickSolution solve_drury_arveson(const std::vector<Point>& nodes, const std::vector<Complex>& targets,
                                 const PsdVerdict& verdict) {
  const Index n = static_cast<Index>(nodes.size());
  Matrix pick(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      const auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
      pick(i, j) = (1.0 - targets[ui] * std::conj(targets[uj])) / (1.0 - inner(nodes[ui], nodes[uj]));
    }
  pick = linalg::hermitian_part(pick);
  Matrix a = Matrix::Ones(1, n);
  Matrix b(1, n);
  for (Index j = 0; j < n; ++j) b(0, j) = std::conj(targets[static_cast<std::size_t>(j)]);

  LurkingIsometryResult li = lurking_isometry(nodes, pick, a, b);
  PickSolution out;
  out.realization = std::move(li.realization);
  out.realization_nodes = nodes;
  out.kolmogorov_rank = li.kolmogorov_rank;
  out.gram_residual = li.gram_residual;
  out.interpolation_residual = interpolation_residual(out.realization, nodes, targets);
  out.verdict = verdict;
  return out;
}

}  // namespace

PickSolution solve_pick(const PickProblem& problem, double tol) {
  const Matrix pm = pick_matrix(problem);
  if (problem.target_size() != 1) throw Error(ErrorCode::NotImplemented, "solve_pick handles scalar targets only");
  const PsdVerdict verdict = psd_check(pm, tol);
  if (!verdict.is_psd)
    throw Error(ErrorCode::NotPsd, "Pick matrix has eigenvalue " + std::to_string(verdict.min_eigenvalue));
  const std::vector<Complex> targets = problem.scalar_targets();
  if (problem.kernel.is_drury_arveson()) return solve_drury_arveson(problem.nodes, targets, verdict);

  // Route through the ball embedding; the origin (k(., 0) = a_0 = 1) is the
  // normalization point and is dropped afterwards.
  std::vector<Point> with_origin;
  with_origin.emplace_back(Vector::Zero(static_cast<Index>(problem.dimension)));
  with_origin.insert(with_origin.end(), problem.nodes.begin(), problem.nodes.end());
  const Embedding emb = am_embedding(problem.kernel.gram(with_origin), 0, tol);
  std::vector<Point> embedded;
  for (std::size_t i = 0; i < problem.nodes.size(); ++i)
    embedded.emplace_back(Vector(emb.vectors.col(static_cast<Index>(i + 1))));
  PickSolution out = solve_drury_arveson(embedded, targets, verdict);
  out.embedded = true;
  return out;
}

double pseudohyperbolic(Complex z, Complex w) {
  if (!(std::abs(z) < 1.0) || !(std::abs(w) < 1.0))
    throw Error(ErrorCode::PointOutsideBall, "pseudohyperbolic metric needs points of the open disc");
  return std::abs((z - w) / (1.0 - z * std::conj(w)));
}

}  // namespace pickwick
