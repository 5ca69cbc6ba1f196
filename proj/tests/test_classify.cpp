#include <doctest.h>

#include <functional>
#include <optional>

#include "pickwick/error.hpp"
#include "pickwick/pick/classify.hpp"
#include "support.hpp"

using namespace pickwick;

namespace {

// (-1)^(n+1) binom(a, n): the coefficient of s^n in 1 - (1 - s)^a.
Rational binomial_sign_oracle(const Rational& a, unsigned n) {
  Rational b(1);
  for (unsigned j = 0; j < n; ++j) b = b * (a - Rational(j)) / Rational(j + 1);
  return n % 2 == 1 ? b : Rational(-b);
}

std::vector<Rational> exact_hardy_sobolev(const Rational& a, std::size_t count) {
  std::vector<Rational> out{Rational(1)};
  for (std::size_t n = 1; n < count; ++n)
    out.push_back(out.back() * (a + Rational(static_cast<long>(n) - 1)) / Rational(static_cast<long>(n)));
  return out;
}

std::optional<ErrorCode> code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace

TEST_SUITE("classify") {
  TEST_CASE("one minus reciprocal examples") {
    const auto dir = one_minus_reciprocal_coeffs(KernelCoefficients::dirichlet(), 4);
    CHECK(dir[0] == 0.0);
    CHECK(dir[1] == doctest::Approx(0.5));
    CHECK(dir[2] == doctest::Approx(1.0 / 12));
    const auto mod = one_minus_reciprocal_coeffs(KernelCoefficients::modified_dirichlet(), 4);
    CHECK(mod[2] == doctest::Approx(-0.5));
    const auto sz = one_minus_reciprocal_coeffs(KernelCoefficients::szego(), 6);
    CHECK(sz[1] == 1.0);
    for (std::size_t n = 2; n <= 6; ++n) CHECK(sz[n] == 0.0);

    std::vector<Rational> d;
    for (long n = 0; n < 6; ++n) d.push_back(make_rational(1, n + 1));
    const auto exact = one_minus_reciprocal_coeffs(d);
    CHECK(exact[1] == make_rational(1, 2));
    CHECK(exact[2] == make_rational(1, 12));
    CHECK(exact[3] == make_rational(1, 24));
    CHECK(code_of([] { one_minus_reciprocal_coeffs(std::vector<Rational>{Rational(2)}); }) ==
          ErrorCode::NotNormalized);
  }

  TEST_CASE("hardy-sobolev coefficients match the binomial signs exactly") {
    for (long k = 1; k <= 20; ++k) {
      const Rational a = make_rational(k, 10);
      const auto c = one_minus_reciprocal_coeffs(exact_hardy_sobolev(a, 25));
      CHECK(c[0] == 0);
      for (unsigned n = 1; n < 25; ++n) CHECK(c[n] == binomial_sign_oracle(a, n));
    }
  }

  TEST_CASE("hardy-sobolev grid classification") {
    for (int k = 1; k <= 20; ++k) {
      const double a = k / 10.0;
      const auto v = classify_complete_pick(KernelCoefficients::hardy_sobolev(a), 100);
      CAPTURE(a);
      CHECK(v.pass == (k <= 10));
      if (k > 10) {
        REQUIRE(v.first_violation.has_value());
        CHECK(*v.first_violation == 2);
        CHECK(v.c[2] == doctest::Approx(-a * (a - 1) / 2));
      }
    }
    const auto h2 = classify_complete_pick(KernelCoefficients::hardy_sobolev(2.0), 100);
    CHECK(h2.c[2] == doctest::Approx(-1.0));
    CHECK(classify_complete_pick(KernelCoefficients::hardy_sobolev(0.5), 50).pass);
  }

  TEST_CASE("dirichlet and modified dirichlet") {
    const auto d = classify_complete_pick(KernelCoefficients::dirichlet(), 200);
    CHECK(d.pass);
    CHECK(d.kaluza_applicable);
    CHECK(d.log_convex);
    const auto m = classify_complete_pick(KernelCoefficients::modified_dirichlet(), 50);
    CHECK_FALSE(m.pass);
    REQUIRE(m.first_violation.has_value());
    CHECK(*m.first_violation == 2);
    std::vector<Rational> md{Rational(1)};
    for (long n = 1; n < 4; ++n) md.push_back(make_rational(1, n));
    CHECK(one_minus_reciprocal_coeffs(md)[2] == make_rational(-1, 2));
  }

  TEST_CASE("kaluza implication on random log-convex sequences") {
    auto rng = testing::rng_for(79);
    for (int k = 0; k < 1000; ++k) {
      std::vector<double> a{1.0};
      double step = testing::uniform(rng, -1.0, 0.2);
      double log_a = 0.0;
      for (int n = 1; n <= 30; ++n) {
        log_a += step;
        a.push_back(std::exp(log_a));
        step += testing::uniform(rng, 0.0, 0.05);
      }
      const auto v = classify_complete_pick(KernelCoefficients::from_coeffs(a), 30);
      if (v.log_convex) CHECK(v.pass);
    }
  }

  TEST_CASE("embedding of drury-arveson gram matrices") {
    auto rng = testing::rng_for(83);
    for (int t = 0; t < 10; ++t) {
      std::vector<Point> pts{Point(Vector::Zero(3))};
      for (const auto& p : testing::random_points(rng, 3, 5, 0.9)) pts.push_back(p);
      const Matrix k = KernelCoefficients::drury_arveson().gram(pts);
      const Embedding e = am_embedding(k);
      CHECK(e.reconstruction_residual <= 1e-8);
      CHECK(e.rank <= 3);
      Matrix ez(6, 6), eb(6, 6);
      for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
          ez(i, j) = inner(pts[i], pts[j]);
          eb(i, j) = e.vectors.col(j).dot(e.vectors.col(i));
        }
      CHECK((ez - eb).norm() < 1e-8);
      for (int i = 0; i < 6; ++i) CHECK(e.vectors.col(i).squaredNorm() < 1.0);
    }
  }

  TEST_CASE("embedding edge cases") {
    const Embedding ones = am_embedding(Matrix::Ones(4, 4));
    CHECK(ones.vectors.norm() < 1e-12);

    std::vector<Point> disc{Point{Complex(0.0)}};
    for (Complex c : {Complex(0.5), Complex(-0.3, 0.2), Complex(0.0, 0.7), Complex(0.6, -0.6), Complex(-0.8)})
      disc.push_back(Point{c});
    const Embedding dir = am_embedding(KernelCoefficients::dirichlet().gram(disc));
    CHECK(dir.rank <= 5);
    CHECK(dir.reconstruction_residual <= 1e-8);

    std::vector<Point> few{Point{Complex(0.0)}, Point{Complex(0.5)}, Point{Complex(-0.5)}, Point{Complex(0, 0.5)}};
    const Matrix bergman = KernelCoefficients::hardy_sobolev(2.0).gram(few);
    CHECK(code_of([&] { am_embedding(bergman); }) == ErrorCode::NotCompletePick);

    Matrix unnormalized = Matrix::Constant(2, 2, 2.0);
    CHECK(code_of([&] { am_embedding(unnormalized); }) == ErrorCode::NotNormalized);
    Matrix zero = Matrix::Ones(3, 3);
    zero(1, 2) = zero(2, 1) = 0.0;
    CHECK(code_of([&] { am_embedding(zero); }) == ErrorCode::ZeroKernelEntry);
  }
}
