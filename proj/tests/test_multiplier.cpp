#include <doctest.h>

#include "pickwick/core/monomial_basis.hpp"
#include "pickwick/daspace/daspace.hpp"
#include "pickwick/error.hpp"
#include "pickwick/multiplier/multiplier.hpp"
#include "pickwick/pick/psd.hpp"
#include "support.hpp"

using namespace pickwick;
using doctest::Approx;

TEST_SUITE("multiplier") {
  TEST_CASE("compression examples") {
    const Matrix one = compression(PowerSeries::constant(2, 1.0), 3).matrix;
    CHECK((one - Matrix::Identity(one.rows(), one.cols())).norm() == 0.0);

    const Matrix shift = compression(PowerSeries::coordinate(1, 0), 1).matrix;
    Matrix expected = Matrix::Zero(2, 2);
    expected(1, 0) = 1.0;
    CHECK((shift - expected).norm() < 1e-15);

    const MonomialBasis b(2, 2);
    const Matrix z1 = compression(PowerSeries::coordinate(2, 0), 2).matrix;
    CHECK(z1.rows() == 6);
    CHECK(std::abs(z1(*b.index_of({1, 0}), *b.index_of({0, 0})) - 1.0) < 1e-15);
    CHECK(std::abs(z1(*b.index_of({1, 1}), *b.index_of({0, 1})) - std::sqrt(0.5)) < 1e-15);
  }

  TEST_CASE("compression entries follow the weight ratio") {
    auto rng = testing::rng_for(31);
    const PowerSeries p = testing::random_polynomial(rng, 3, 3, 5);
    const unsigned n = 4;
    const MonomialBasis b(3, n);
    const Matrix m = compression(p, n).matrix;
    for (std::size_t r = 0; r < b.size(); ++r) {
      for (std::size_t c = 0; c < b.size(); ++c) {
        Complex expected = 0.0;
        if (b[r].divisible_by(b[c]))
          expected = p.coefficient(b[r] - b[c]) * std::sqrt(to_double(factorial_ratio(b[r]) / factorial_ratio(b[c])));
        CHECK(std::abs(m(r, c) - expected) < 1e-14);
      }
    }
  }

  TEST_CASE("compression is multiplicative on lower-triangular truncations") {
    auto rng = testing::rng_for(37);
    const PowerSeries p = testing::random_polynomial(rng, 2, 2, 3);
    const PowerSeries q = testing::random_polynomial(rng, 2, 2, 3);
    const unsigned n = 5;
    const Matrix lhs = compression(p * q, n).matrix;
    const Matrix rhs = compression(p, n).matrix * compression(q, n).matrix;
    CHECK((lhs - rhs).norm() < 1e-12 * (1.0 + lhs.norm()));
  }

  TEST_CASE("multiplier norm lower bounds") {
    for (unsigned n = 1; n <= 6; ++n) CHECK(mult_norm_lower(PowerSeries::coordinate(2, 0), n) == Approx(1.0));
    for (unsigned n = 0; n <= 4; ++n) CHECK(mult_norm_lower(PowerSeries::constant(3, 1.0), n) == Approx(1.0));
    CHECK(mult_norm_lower(to_complex(two_z1z2_power(1)), 2) >= std::sqrt(2.0) - 1e-12);
  }

  TEST_CASE("lower bounds are monotone and dominate the norm") {
    auto rng = testing::rng_for(41);
    for (int k = 0; k < 10; ++k) {
      const std::size_t d = static_cast<std::size_t>(testing::uniform_int(rng, 1, 3));
      const PowerSeries p = testing::random_polynomial(rng, d, 3, 4);
      double prev = 0.0;
      for (unsigned n = 0; n <= 6; ++n) {
        const double v = mult_norm_lower(p, n);
        CHECK(v >= prev - 1e-12);
        if (n >= p.degree()) CHECK(v >= std::sqrt(da_norm_sq(p)) - 1e-12);
        prev = v;
      }
    }
  }

  TEST_CASE("extremal family separates multiplier and sup norms") {
    for (unsigned n = 1; n <= 4; ++n) {
      const PowerSeries p = to_complex(two_z1z2_power(n));
      const double g = to_double(da_norm_sq(two_z1z2_power(n)));
      CHECK(mult_norm_lower(p, 2 * n) >= std::sqrt(g) - 1e-10);
    }
  }

  TEST_CASE("adjoint action on monomials") {
    const auto a = adjoint_monomial_apply(0, {1, 1});
    REQUIRE(a.has_value());
    CHECK(a->first == MultiIndex{0, 1});
    CHECK(a->second == make_rational(1, 2));
    CHECK_FALSE(adjoint_monomial_apply(1, {3, 0}).has_value());
    const auto b = adjoint_monomial_apply(0, {1, 0});
    REQUIRE(b.has_value());
    CHECK(b->first == MultiIndex{0, 0});
    CHECK(b->second == 1);
  }

  TEST_CASE("adjoint action is the adjoint of the shift") {
    // <M_i^* z^a, z^b> = <z^a, z_i z^b> in the space norm.
    for (const auto& alpha : enumerate_up_to(3, 5)) {
      for (std::size_t i = 0; i < 3; ++i) {
        const auto hit = adjoint_monomial_apply(i, alpha);
        if (!hit) {
          CHECK(alpha[i] == 0);
          continue;
        }
        CHECK(hit->second * factorial_ratio(hit->first) == factorial_ratio(alpha));
      }
    }
  }

  TEST_CASE("criterion matrix") {
    auto rng = testing::rng_for(43);
    const auto pts = testing::random_points(rng, 2, 5, 0.8);
    const auto da = KernelCoefficients::drury_arveson();
    const Matrix zero = mult_criterion_matrix(std::vector<Complex>(5, 0.0), pts, da);
    CHECK((zero - da.gram(pts)).norm() < 1e-14);
    CHECK(psd_check(zero).is_psd);
    const Matrix unimodular = mult_criterion_matrix(std::vector<Complex>(5, std::polar(1.0, 0.7)), pts, da);
    CHECK(unimodular.norm() < 1e-13);
    CHECK_THROWS_AS(mult_criterion_matrix(std::vector<Complex>(4, 0.0), pts, da), Error);

    const std::vector<Point> disc{Point{Complex(0.0)}, Point{Complex(0.3)}};
    const Matrix bad = mult_criterion_matrix({0.0, 0.9}, disc, da);
    CHECK_FALSE(psd_check(bad).is_psd);
    const Matrix good = mult_criterion_matrix({0.0, 0.29}, disc, da);
    CHECK(psd_check(good).is_psd);
  }

  TEST_CASE("sarason function") {
    auto rng = testing::rng_for(47);
    const Point z = testing::random_point(rng, 2, 0.9);
    CHECK(std::abs(sarason_function(PowerSeries::constant(2, 1.0), z) - 1.0) < 1e-14);
    for (int k = 0; k < 100; ++k) {
      const std::size_t d = static_cast<std::size_t>(testing::uniform_int(rng, 1, 3));
      const PowerSeries f = testing::random_polynomial(rng, d, 4, 4);
      const Point origin(Vector::Zero(static_cast<Eigen::Index>(d)));
      CHECK(std::abs(sarason_function(f, origin) - da_norm_sq(f)) < 1e-12 * (1.0 + da_norm_sq(f)));
      const Point w = testing::random_point(rng, d, 0.99);
      CHECK(sarason_function(f, w).real() >= -1e-10);
    }
    CHECK_THROWS_AS(sarason_function(PowerSeries::constant(1, 1.0), Point{Complex(1.0)}), Error);
  }

  TEST_CASE("coordinate row and column norms") {
    for (std::size_t d : {2, 3}) {
      const RowColumnNorms n = coordinate_row_column_norms(d, 6);
      CHECK(std::abs(n.column - std::sqrt(static_cast<double>(d))) < 1e-10);
      CHECK(n.row <= 1.0 + 1e-10);
      CHECK(std::abs(n.row_off_constants - 1.0) < 1e-10);
    }
  }
}
