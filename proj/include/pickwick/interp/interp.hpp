#pragma once

#include <cstddef>
#include <vector>

#include "pickwick/core/linalg.hpp"
#include "pickwick/daspace/point.hpp"
#include "pickwick/kernel.hpp"

namespace pickwick {

/// G_nm = k(z_n, z_m) / sqrt(k(z_n, z_n) k(z_m, z_m)).
Matrix gram_normalized(const std::vector<Point>& points, const KernelCoefficients& kernel);

struct SequenceThresholds {
  double ws_epsilon = 0.0;
  double carleson = 1e300;
  double riesz_lower = 0.0;
};

struct SequenceReport {
  /// min over pairs of 1 - |G_nm|^2 (1 for a single point).
  double ws_epsilon = 1.0;
  /// Top eigenvalue of G: the finite-set Carleson constant.
  double carleson_upper = 1.0;
  double riesz_lower = 1.0;
  double riesz_upper = 1.0;
  SequenceThresholds thresholds;
  bool weakly_separated = false;
  bool carleson_bounded = false;
  bool riesz = false;
};

SequenceReport sequence_report(const std::vector<Point>& points, const KernelCoefficients& kernel,
                               const SequenceThresholds& thresholds = {});
SequenceReport sequence_report(const Matrix& gram, const SequenceThresholds& thresholds = {});

struct Subsequence {
  std::vector<std::size_t> kept;
  double eta = 0.0;
  /// Gershgorin certificate 1 -/+ (kept - 1) eta, clipped below at 0.
  double riesz_lower_bound = 1.0;
  double riesz_upper_bound = 1.0;
};

/// Greedy scan keeping n iff |G_nm| <= eta for every kept m < n.
Subsequence extract_subsequence(const std::vector<Point>& points, const KernelCoefficients& kernel,
                                double eta);
Subsequence extract_subsequence(const Matrix& gram, double eta);

}  // namespace pickwick
