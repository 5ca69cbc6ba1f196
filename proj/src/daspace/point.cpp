#include "pickwick/daspace/point.hpp"

#include <string>

#include "pickwick/error.hpp"

namespace pickwick {

Point::Point(std::initializer_list<Complex> coords) : coords_(static_cast<Eigen::Index>(coords.size())) {
  Eigen::Index k = 0;
  for (const auto& c : coords) coords_(k++) = c;
}

Point::Point(const std::vector<Complex>& coords) : coords_(static_cast<Eigen::Index>(coords.size())) {
  for (std::size_t k = 0; k < coords.size(); ++k) coords_(static_cast<Eigen::Index>(k)) = coords[k];
}

Complex inner(const Point& z, const Point& w) {
  if (z.dimension() != w.dimension())
    throw Error(ErrorCode::DimensionMismatch, "points have different dimensions");
  // Eigen's dot conjugates its first argument.
  return w.coords().dot(z.coords());
}

void require_in_ball(const Point& z, const char* what) {
  const double r2 = z.norm_sq();
  if (!(r2 < 1.0))
    throw Error(ErrorCode::PointOutsideBall,
                std::string(what) + " has squared norm " + std::to_string(r2) + " >= 1");
}

}  // namespace pickwick
