#include "pickwick/kernel.hpp"

#include <cmath>
#include <sstream>

#include "pickwick/error.hpp"

namespace pickwick {

KernelCoefficients KernelCoefficients::drury_arveson() {
  return KernelCoefficients(KernelFamily::DruryArveson, 1.0, {});
}

KernelCoefficients KernelCoefficients::hardy_sobolev(double a) {
  if (!(a > 0.0)) throw Error(ErrorCode::InvalidArgument, "H_a kernel needs a > 0");
  if (a == 1.0) return drury_arveson();
  return KernelCoefficients(KernelFamily::HardySobolev, a, {});
}

KernelCoefficients KernelCoefficients::dirichlet() {
  return KernelCoefficients(KernelFamily::Dirichlet, 1.0, {});
}

KernelCoefficients KernelCoefficients::modified_dirichlet() {
  return KernelCoefficients(KernelFamily::ModifiedDirichlet, 1.0, {});
}

KernelCoefficients KernelCoefficients::from_coeffs(std::vector<double> coeffs) {
  if (coeffs.empty() || coeffs.front() != 1.0)
    throw Error(ErrorCode::NotNormalized, "kernel coefficients must start with a_0 = 1");
  for (double c : coeffs)
    if (!(c >= 0.0) || !std::isfinite(c))
      throw Error(ErrorCode::InvalidArgument, "kernel coefficients must be finite and >= 0");
  return KernelCoefficients(KernelFamily::Coefficients, 1.0, std::move(coeffs));
}

std::string KernelCoefficients::name() const {
  switch (family_) {
    case KernelFamily::DruryArveson: return "drury-arveson";
    case KernelFamily::HardySobolev: {
      std::ostringstream os;
      os << "hardy-sobolev(a=" << parameter_ << ")";
      return os.str();
    }
    case KernelFamily::Dirichlet: return "dirichlet";
    case KernelFamily::ModifiedDirichlet: return "modified-dirichlet";
    case KernelFamily::Coefficients: return "coefficients";
  }
  return "unknown";
}

double KernelCoefficients::coefficient(std::size_t n) const {
  switch (family_) {
    case KernelFamily::DruryArveson: return 1.0;
    case KernelFamily::HardySobolev: {
      double c = 1.0;
      for (std::size_t j = 1; j <= n; ++j) c *= (static_cast<double>(j) - 1.0 + parameter_) / static_cast<double>(j);
      return c;
    }
    case KernelFamily::Dirichlet: return 1.0 / (static_cast<double>(n) + 1.0);
    case KernelFamily::ModifiedDirichlet: return n == 0 ? 1.0 : 1.0 / static_cast<double>(n);
    case KernelFamily::Coefficients: return n < stored_.size() ? stored_[n] : 0.0;
  }
  return 0.0;
}

std::vector<double> KernelCoefficients::coefficients(std::size_t max_index) const {
  std::vector<double> out(max_index + 1);
  if (family_ == KernelFamily::HardySobolev) {
    out[0] = 1.0;
    for (std::size_t j = 1; j <= max_index; ++j)
      out[j] = out[j - 1] * (static_cast<double>(j) - 1.0 + parameter_) / static_cast<double>(j);
    return out;
  }
  for (std::size_t n = 0; n <= max_index; ++n) out[n] = coefficient(n);
  return out;
}

namespace {

// log(1 - s) without cancellation for small |s|.
Complex log_one_minus(Complex s) {
  return {0.5 * std::log1p(std::norm(s) - 2.0 * s.real()), std::arg(1.0 - s)};
}

}  // namespace

Complex KernelCoefficients::eval(Complex s) const {
  const double r = std::abs(s);
  if (!(r < 1.0)) throw Error(ErrorCode::PointOutsideBall, "kernel argument |<z,w>| >= 1");
  switch (family_) {
    case KernelFamily::DruryArveson: return 1.0 / (1.0 - s);
    case KernelFamily::HardySobolev: return std::exp(-parameter_ * log_one_minus(s));
    case KernelFamily::Dirichlet: {
      if (r < 1e-3) {
        Complex acc = 0.0, power = 1.0;
        for (int n = 0; n < 12; ++n, power *= s) acc += power / static_cast<double>(n + 1);
        return acc;
      }
      return -log_one_minus(s) / s;
    }
    case KernelFamily::ModifiedDirichlet: return 1.0 - log_one_minus(s);
    case KernelFamily::Coefficients: {
      Complex acc = 0.0, power = 1.0, last = 0.0;
      for (double c : stored_) {
        last = c * power;
        acc += last;
        power *= s;
      }
      // Bound the remainder by a geometric continuation of the last term.
      const double tail = std::abs(last) * r / (1.0 - r);
      if (stored_.size() > 1 && tail > 1e-12 * std::max(1.0, std::abs(acc)))
        throw Error(ErrorCode::KernelSeriesDiverged,
                    "stored truncation of " + std::to_string(stored_.size()) +
                        " coefficients does not resolve the kernel at |s| = " + std::to_string(r));
      return acc;
    }
  }
  return 0.0;
}

Complex KernelCoefficients::operator()(const Point& z, const Point& w) const {
  require_in_ball(z, "z");
  require_in_ball(w, "w");
  return eval(inner(z, w));
}

Matrix KernelCoefficients::gram(const std::vector<Point>& points) const {
  const auto n = static_cast<Eigen::Index>(points.size());
  Matrix g(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    g(i, i) = Complex((*this)(points[i], points[i]).real(), 0.0);
    for (Eigen::Index j = i + 1; j < n; ++j) {
      g(i, j) = (*this)(points[i], points[j]);
      g(j, i) = std::conj(g(i, j));
    }
  }
  return g;
}

}  // namespace pickwick
