#pragma once

#include <complex>
#include <initializer_list>
#include <vector>

#include "pickwick/core/linalg.hpp"

namespace pickwick {

/// A point of C^d. Ball membership is checked by the operations that need it.
class Point {
 public:
  Point() = default;
  explicit Point(Vector coords) : coords_(std::move(coords)) {}
  Point(std::initializer_list<Complex> coords);
  explicit Point(const std::vector<Complex>& coords);

  std::size_t dimension() const noexcept { return static_cast<std::size_t>(coords_.size()); }
  const Complex& operator[](std::size_t i) const { return coords_(static_cast<Eigen::Index>(i)); }
  const Vector& coords() const noexcept { return coords_; }

  double norm_sq() const { return coords_.squaredNorm(); }
  bool in_ball() const { return norm_sq() < 1.0; }

 private:
  Vector coords_;
};

/// <z, w> = sum z_i conj(w_i).
Complex inner(const Point& z, const Point& w);

/// Throws PointOutsideBall unless ||z|| < 1.
void require_in_ball(const Point& z, const char* what = "point");

}  // namespace pickwick
