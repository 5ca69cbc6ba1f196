#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pickwick/core/linalg.hpp"
#include "pickwick/daspace/point.hpp"

namespace pickwick {

enum class KernelFamily {
  DruryArveson,       // a_n = 1 (Szego kernel when d = 1)
  HardySobolev,       // (1 - s)^(-a), a_n = (a)_n / n!
  Dirichlet,          // a_n = 1/(n+1)
  ModifiedDirichlet,  // a_0 = 1, a_n = 1/n
  Coefficients,       // explicit truncated list
};

/// Radially symmetric kernel k(z, w) = sum_n a_n <z, w>^n normalized by
/// a_0 = 1, all a_n >= 0.
///
/// Named families evaluate in closed form. An explicit coefficient list is a
/// truncated power series; evaluation throws KernelSeriesDiverged when the
/// last stored term is not negligible at |s|.
class KernelCoefficients {
 public:
  static KernelCoefficients drury_arveson();
  static KernelCoefficients szego() { return drury_arveson(); }
  static KernelCoefficients hardy_sobolev(double a);
  static KernelCoefficients dirichlet();
  static KernelCoefficients modified_dirichlet();
  static KernelCoefficients from_coeffs(std::vector<double> coeffs);

  KernelFamily family() const noexcept { return family_; }
  bool is_drury_arveson() const noexcept { return family_ == KernelFamily::DruryArveson; }
  /// Only meaningful for HardySobolev.
  double parameter() const noexcept { return parameter_; }
  std::string name() const;

  double coefficient(std::size_t n) const;
  /// a_0, ..., a_N.
  std::vector<double> coefficients(std::size_t max_index) const;
  /// Stored list for the Coefficients family.
  const std::vector<double>& stored() const noexcept { return stored_; }

  /// Value of the generating function at s = <z, w>, |s| < 1.
  Complex eval(Complex s) const;
  Complex operator()(const Point& z, const Point& w) const;

  /// Kernel matrix [k(z_i, z_j)] (Hermitian by symmetrization).
  Matrix gram(const std::vector<Point>& points) const;

 private:
  KernelCoefficients(KernelFamily family, double parameter, std::vector<double> stored)
      : family_(family), parameter_(parameter), stored_(std::move(stored)) {}

  KernelFamily family_;
  double parameter_ = 1.0;
  std::vector<double> stored_;
};

}  // namespace pickwick
