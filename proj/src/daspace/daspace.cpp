#include "pickwick/daspace/daspace.hpp"

#include <cmath>

#include "pickwick/error.hpp"

namespace pickwick {

PowerSeries to_complex(const RationalSeries& f) {
  PowerSeries out(f.dimension());
  for (const auto& [alpha, c] : f) out.set(alpha, Complex(to_double(c), 0.0));
  return out;
}

Rational da_norm_sq(const RationalSeries& f) {
  Rational acc = 0;
  for (const auto& [alpha, c] : f) acc += c * c * factorial_ratio(alpha);
  return acc;
}

double da_norm_sq(const PowerSeries& f) {
  double acc = 0.0;
  for (const auto& [alpha, c] : f) acc += std::norm(c) * to_double(factorial_ratio(alpha));
  return acc;
}

Complex da_inner(const PowerSeries& f, const PowerSeries& g) {
  if (f.dimension() != g.dimension()) throw Error(ErrorCode::DimensionMismatch, "inner product dimensions");
  Complex acc = 0.0;
  for (const auto& [alpha, c] : f) {
    const Complex cg = g.coefficient(alpha);
    if (cg != Complex(0.0)) acc += c * std::conj(cg) * to_double(factorial_ratio(alpha));
  }
  return acc;
}

double ha_norm_sq(const PowerSeries& f, double a) {
  double acc = 0.0;
  for (const auto& [alpha, c] : f)
    acc += std::norm(c) * to_double(factorial_ratio(alpha)) * std::pow(alpha.degree() + 1.0, 1.0 - a);
  return acc;
}

namespace {

Rational bergman_weight(const MultiIndex& alpha) {
  const long n = alpha.degree();
  return factorial_ratio(alpha) * make_rational(2, (n + 1) * (n + 2));
}

void require_two_variables(std::size_t d) {
  if (d != 2) throw Error(ErrorCode::DimensionMismatch, "Bergman comparison is defined for d = 2");
}

}  // namespace

Rational bergman2_norm_sq(const RationalSeries& f) {
  require_two_variables(f.dimension());
  Rational acc = 0;
  for (const auto& [alpha, c] : f) acc += c * c * bergman_weight(alpha);
  return acc;
}

double bergman2_norm_sq(const PowerSeries& f) {
  require_two_variables(f.dimension());
  double acc = 0.0;
  for (const auto& [alpha, c] : f) acc += std::norm(c) * to_double(bergman_weight(alpha));
  return acc;
}

Complex kernel_eval(const Point& z, const Point& w) {
  require_in_ball(z, "z");
  require_in_ball(w, "w");
  return 1.0 / (1.0 - inner(z, w));
}

PowerSeries kernel_coeffs(const Point& w, unsigned max_degree) {
  require_in_ball(w, "w");
  const std::size_t d = w.dimension();
  PowerSeries out(d);
  for (const auto& alpha : enumerate_up_to(d, max_degree)) {
    const Complex value = std::conj(eval_monomial(alpha, w)) * word_count(alpha).get_d();
    out.set(alpha, value);
  }
  return out;
}

Complex eval_monomial(const MultiIndex& alpha, const Point& z) {
  if (alpha.dimension() != z.dimension()) throw Error(ErrorCode::DimensionMismatch, "monomial/point dimensions");
  Complex v = 1.0;
  for (std::size_t i = 0; i < alpha.dimension(); ++i)
    for (unsigned e = 0; e < alpha[i]; ++e) v *= z[i];
  return v;
}

Complex eval_series(const PowerSeries& f, const Point& z) {
  Complex acc = 0.0;
  for (const auto& [alpha, c] : f) acc += c * eval_monomial(alpha, z);
  return acc;
}

PowerSeries radial_derivative(const PowerSeries& f) {
  PowerSeries out(f.dimension());
  for (const auto& [alpha, c] : f) out.set(alpha, c * static_cast<double>(alpha.degree()));
  return out;
}

RationalSeries radial_derivative(const RationalSeries& f) {
  RationalSeries out(f.dimension());
  for (const auto& [alpha, c] : f) out.set(alpha, c * alpha.degree());
  return out;
}

PowerSeries compose_linear(const PowerSeries& f, const Matrix& u) {
  const std::size_t d = f.dimension();
  if (static_cast<std::size_t>(u.rows()) != d || static_cast<std::size_t>(u.cols()) != d)
    throw Error(ErrorCode::DimensionMismatch, "composition matrix must be d x d");
  // (U z)_i = sum_j U_ij z_j
  std::vector<PowerSeries> linear;
  for (std::size_t i = 0; i < d; ++i) {
    PowerSeries li(d);
    for (std::size_t j = 0; j < d; ++j)
      li.set(MultiIndex::unit(d, j), u(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));
    linear.push_back(std::move(li));
  }
  PowerSeries out(d);
  for (const auto& [alpha, c] : f) {
    PowerSeries term = PowerSeries::constant(d, c);
    for (std::size_t i = 0; i < d; ++i)
      if (alpha[i] > 0) term = term * linear[i].pow(alpha[i]);
    out += term;
  }
  return out;
}

RationalSeries two_z1z2_power(unsigned n) {
  BigInt two_n;
  mpz_ui_pow_ui(two_n.get_mpz_t(), 2, n);
  return RationalSeries::monomial(MultiIndex{n, n}, Rational(two_n));
}

}  // namespace pickwick
