#pragma once

// Seeded generators shared by the test binaries.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "pickwick/daspace/daspace.hpp"
#include "pickwick/daspace/point.hpp"
#include "pickwick/daspace/power_series.hpp"
#include "pickwick/optheory/generators.hpp"
#include "pickwick/pick/pick.hpp"

namespace testing {

using namespace pickwick;

inline std::mt19937_64 rng_for(std::uint64_t seed) { return std::mt19937_64(seed * 0x9E3779B97F4A7C15ULL + 17); }

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline Point random_point(std::mt19937_64& rng, std::size_t d, double radius) {
  return Point(random_ball_vector(rng, d, radius));
}

inline std::vector<Point> random_points(std::mt19937_64& rng, std::size_t d, std::size_t n, double radius) {
  std::vector<Point> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(random_point(rng, d, radius));
  return out;
}

inline MultiIndex random_index(std::mt19937_64& rng, std::size_t d, unsigned max_degree) {
  const unsigned n = static_cast<unsigned>(uniform_int(rng, 0, static_cast<int>(max_degree)));
  std::vector<unsigned> e(d, 0);
  for (unsigned k = 0; k < n; ++k) ++e[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(d) - 1))];
  return MultiIndex(e);
}

inline PowerSeries random_polynomial(std::mt19937_64& rng, std::size_t d, unsigned max_degree, int terms) {
  PowerSeries f(d);
  for (int k = 0; k < terms; ++k) f.add_term(random_index(rng, d, max_degree), random_complex(rng));
  return f;
}

inline RationalSeries random_rational_polynomial(std::mt19937_64& rng, std::size_t d, unsigned max_degree,
                                                 int terms) {
  RationalSeries f(d);
  for (int k = 0; k < terms; ++k)
    f.add_term(random_index(rng, d, max_degree), make_rational(uniform_int(rng, -9, 9), uniform_int(rng, 1, 7)));
  return f;
}

/// Polynomial with sum |c_alpha| = scale, hence a multiplier of norm <= scale.
inline PowerSeries random_contractive_polynomial(std::mt19937_64& rng, std::size_t d, unsigned max_degree,
                                                 int terms, double scale) {
  PowerSeries f = random_polynomial(rng, d, max_degree, terms);
  double l1 = 0.0;
  for (const auto& [alpha, c] : f) l1 += std::abs(c);
  if (l1 == 0.0) return PowerSeries::constant(d, Complex(scale * 0.5));
  return f * Complex(scale / l1);
}

struct FeasibleProblem {
  PowerSeries phi;
  PickProblem problem;
};

/// Nodes in the ball of radius 0.9 with targets phi(z_i) for a contractive
/// polynomial phi: feasible by construction.
inline FeasibleProblem random_feasible_pick(std::mt19937_64& rng, std::size_t d, std::size_t n) {
  FeasibleProblem out{random_contractive_polynomial(rng, d, 3, 4, 0.99), {}};
  std::vector<Point> nodes = random_points(rng, d, n, 0.9);
  std::vector<Complex> targets;
  for (const auto& z : nodes) targets.push_back(eval_series(out.phi, z));
  out.problem = PickProblem::scalar(d, std::move(nodes), targets);
  return out;
}

inline bool all_finite(const Matrix& m) { return m.allFinite(); }

}  // namespace testing
