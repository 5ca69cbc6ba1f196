#pragma once

#include <complex>

#include "pickwick/core/linalg.hpp"
#include "pickwick/core/rational.hpp"
#include "pickwick/daspace/point.hpp"
#include "pickwick/daspace/power_series.hpp"

namespace pickwick {

// Norms. Rational overloads are exact; complex overloads are double precision.

/// sum |a_alpha|^2 alpha!/|alpha|!
Rational da_norm_sq(const RationalSeries& f);
double da_norm_sq(const PowerSeries& f);

/// <f, g> in H^2_d.
Complex da_inner(const PowerSeries& f, const PowerSeries& g);

/// Power-series norm of the H_a scale, weight alpha!/|alpha|! (|alpha|+1)^(1-a).
/// At a = 1 this is the Drury-Arveson norm.
double ha_norm_sq(const PowerSeries& f, double a);

/// Bergman space of the ball B_2: weight alpha!/|alpha|! * 2/((|alpha|+1)(|alpha|+2)).
Rational bergman2_norm_sq(const RationalSeries& f);
double bergman2_norm_sq(const PowerSeries& f);

// Kernel and evaluation.

/// 1/(1 - <z, w>); both points must lie in the open ball.
Complex kernel_eval(const Point& z, const Point& w);

/// Truncation of K_w = sum (|alpha|!/alpha!) conj(w)^alpha z^alpha to degree N.
PowerSeries kernel_coeffs(const Point& w, unsigned max_degree);

Complex eval_series(const PowerSeries& f, const Point& z);
/// z^alpha.
Complex eval_monomial(const MultiIndex& alpha, const Point& z);

/// R z^alpha = |alpha| z^alpha.
PowerSeries radial_derivative(const PowerSeries& f);
RationalSeries radial_derivative(const RationalSeries& f);

/// f o U, i.e. z -> f(U z), for a d x d matrix U. Degrees are preserved.
PowerSeries compose_linear(const PowerSeries& f, const Matrix& u);

/// (2 z_1 z_2)^n, the extremal family separating the multiplier norm from
/// the supremum norm.
RationalSeries two_z1z2_power(unsigned n);

}  // namespace pickwick
