#include <doctest.h>

#include "pickwick/error.hpp"
#include "pickwick/kernel.hpp"
#include "support.hpp"

using namespace pickwick;

namespace {

Complex partial_sum(const KernelCoefficients& k, Complex s, std::size_t terms) {
  Complex acc = 0.0, power = 1.0;
  for (double c : k.coefficients(terms)) {
    acc += c * power;
    power *= s;
  }
  return acc;
}

}  // namespace

TEST_SUITE("kernel") {
  TEST_CASE("closed forms agree with the coefficient series") {
    const std::vector<KernelCoefficients> ks{KernelCoefficients::drury_arveson(), KernelCoefficients::dirichlet(),
                                             KernelCoefficients::modified_dirichlet(),
                                             KernelCoefficients::hardy_sobolev(0.5),
                                             KernelCoefficients::hardy_sobolev(2.5)};
    auto rng = testing::rng_for(23);
    for (const auto& k : ks) {
      for (int t = 0; t < 20; ++t) {
        const Complex s = std::polar(testing::uniform(rng, 0.0, 0.6), testing::uniform(rng, 0.0, 6.3));
        CAPTURE(k.name());
        CHECK(std::abs(k.eval(s) - partial_sum(k, s, 200)) < 1e-11);
      }
      CHECK(k.eval(0.0) == Complex(1.0));
    }
  }

  TEST_CASE("small arguments of the dirichlet kernel") {
    const auto k = KernelCoefficients::dirichlet();
    for (double r : {1e-9, 1e-5, 9e-4, 1.1e-3})
      CHECK(std::abs(k.eval(r) - partial_sum(k, r, 40)) < 1e-15);
  }

  TEST_CASE("hardy-sobolev coefficients") {
    const auto h = KernelCoefficients::hardy_sobolev(0.5);
    CHECK(h.coefficient(1) == doctest::Approx(0.5));
    CHECK(h.coefficient(2) == doctest::Approx(0.375));
    CHECK(KernelCoefficients::hardy_sobolev(1.0).is_drury_arveson());
    CHECK(KernelCoefficients::hardy_sobolev(2.0).coefficient(5) == doctest::Approx(6.0));
    CHECK_THROWS_AS(KernelCoefficients::hardy_sobolev(0.0), Error);
  }

  TEST_CASE("explicit coefficient lists") {
    CHECK_THROWS_AS(KernelCoefficients::from_coeffs({0.5, 1.0}), Error);
    CHECK_THROWS_AS(KernelCoefficients::from_coeffs({1.0, -1.0}), Error);
    const auto k = KernelCoefficients::from_coeffs(std::vector<double>(60, 1.0));
    CHECK(std::abs(k.eval(0.3) - 1.0 / 0.7) < 1e-12);
    try {
      k.eval(0.9);
      FAIL("expected divergence");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::KernelSeriesDiverged);
    }
  }

  TEST_CASE("gram matrix is hermitian and psd") {
    auto rng = testing::rng_for(29);
    const auto pts = testing::random_points(rng, 2, 6, 0.9);
    for (const auto& k : {KernelCoefficients::drury_arveson(), KernelCoefficients::dirichlet()}) {
      const Matrix g = k.gram(pts);
      CHECK((g - g.adjoint()).norm() == 0.0);
      CHECK(linalg::hermitian_eigenvalues(g)(0) > -1e-12);
      CHECK(std::abs(g(0, 1) - k(pts[0], pts[1])) < 1e-15);
    }
    CHECK_THROWS_AS(KernelCoefficients::drury_arveson()(Point{Complex(1.0)}, Point{Complex(0.0)}), Error);
  }
}
