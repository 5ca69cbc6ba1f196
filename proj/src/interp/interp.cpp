#include "pickwick/interp/interp.hpp"

#include <algorithm>
#include <cmath>

#include "pickwick/error.hpp"

namespace pickwick {

Matrix gram_normalized(const std::vector<Point>& points, const KernelCoefficients& kernel) {
  for (const auto& z : points) require_in_ball(z, "sequence point");
  const Matrix k = kernel.gram(points);
  const Eigen::Index n = k.rows();
  Matrix g(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const double denom = std::sqrt(k(i, i).real() * k(j, j).real());
      if (!(denom > 0.0)) throw Error(ErrorCode::ZeroKernelEntry, "kernel vanishes on the diagonal");
      g(i, j) = i == j ? Complex(1.0) : k(i, j) / denom;
    }
  }
  return linalg::hermitian_part(g);
}

SequenceReport sequence_report(const Matrix& gram, const SequenceThresholds& thresholds) {
  SequenceReport r;
  r.thresholds = thresholds;
  const Eigen::Index n = gram.rows();
  if (n == 0) throw Error(ErrorCode::SizeMismatch, "empty point set");
  r.ws_epsilon = 1.0;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j) r.ws_epsilon = std::min(r.ws_epsilon, 1.0 - std::norm(gram(i, j)));
  r.ws_epsilon = std::clamp(r.ws_epsilon, 0.0, 1.0);
  const RealVector ev = linalg::hermitian_eigenvalues(gram);
  r.riesz_lower = std::max(ev(0), 0.0);
  r.riesz_upper = ev(n - 1);
  r.carleson_upper = r.riesz_upper;
  r.weakly_separated = r.ws_epsilon > thresholds.ws_epsilon;
  r.carleson_bounded = r.carleson_upper < thresholds.carleson;
  r.riesz = r.riesz_lower > thresholds.riesz_lower;
  return r;
}

SequenceReport sequence_report(const std::vector<Point>& points, const KernelCoefficients& kernel,
                               const SequenceThresholds& thresholds) {
  return sequence_report(gram_normalized(points, kernel), thresholds);
}

Subsequence extract_subsequence(const Matrix& gram, double eta) {
  if (!(eta >= 0.0) || eta > 1.0) throw Error(ErrorCode::InvalidArgument, "eta must lie in [0, 1]");
  Subsequence s;
  s.eta = eta;
  for (Eigen::Index n = 0; n < gram.rows(); ++n) {
    const bool ok = std::all_of(s.kept.begin(), s.kept.end(), [&](std::size_t m) {
      return std::abs(gram(n, static_cast<Eigen::Index>(m))) <= eta;
    });
    if (ok) s.kept.push_back(static_cast<std::size_t>(n));
  }
  const double spread = s.kept.empty() ? 0.0 : static_cast<double>(s.kept.size() - 1) * eta;
  s.riesz_lower_bound = std::max(0.0, 1.0 - spread);
  s.riesz_upper_bound = 1.0 + spread;
  return s;
}

Subsequence extract_subsequence(const std::vector<Point>& points, const KernelCoefficients& kernel, double eta) {
  return extract_subsequence(gram_normalized(points, kernel), eta);
}

}  // namespace pickwick
