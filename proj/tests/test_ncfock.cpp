#include <doctest.h>

#include "pickwick/daspace/daspace.hpp"
#include "pickwick/ncfock/ncfock.hpp"
#include "support.hpp"

using namespace pickwick;

namespace {

MatrixTuple random_row_contraction(std::mt19937_64& rng, std::size_t d, Eigen::Index n, double r) {
  std::vector<Matrix> ms;
  for (std::size_t i = 0; i < d; ++i) {
    Matrix m(n, n);
    for (Eigen::Index a = 0; a < n; ++a)
      for (Eigen::Index b = 0; b < n; ++b) m(a, b) = random_complex(rng);
    ms.push_back(m);
  }
  const MatrixTuple t(std::move(ms));
  return t.scaled(r / t.row_norm());
}

}  // namespace

TEST_SUITE("ncfock") {
  TEST_CASE("word order and abelianization") {
    CHECK(Word{1} < Word{0, 0});
    CHECK(Word{0, 1} < Word{1, 0});
    CHECK(Word{1, 0, 1}.abelianization(3) == MultiIndex{1, 2, 0});
    const auto ws = words_of({1, 1});
    REQUIRE(ws.size() == 2);
    CHECK(ws[0] == Word{0, 1});
    CHECK(ws[1] == Word{1, 0});
  }

  TEST_CASE("words_of counts") {
    auto rng = testing::rng_for(151);
    for (int k = 0; k < 40; ++k) {
      const MultiIndex alpha = testing::random_index(rng, 3, 7);
      const auto ws = words_of(alpha);
      CHECK(mpz_class(ws.size()) == word_count(alpha));
      for (const auto& w : ws) CHECK(w.abelianization(3) == alpha);
      CHECK(std::is_sorted(ws.begin(), ws.end()));
    }
  }

  TEST_CASE("symmetrize examples") {
    RationalSeries f(2);
    f.add_term({1, 1}, 1);
    const RationalNCSeries v = symmetrize(f);
    CHECK(v.size() == 2);
    CHECK(v.coefficient(Word{0, 1}) == make_rational(1, 2));
    CHECK(v.coefficient(Word{1, 0}) == make_rational(1, 2));
    CHECK(nc_norm_sq(v) == make_rational(1, 2));
    CHECK(da_norm_sq(f) == make_rational(1, 2));
    RationalSeries g(2);
    g.add_term({2, 1}, 3);
    const RationalNCSeries vg = symmetrize(g);
    for (const auto& w : words_of({2, 1})) CHECK(vg.coefficient(w) == 1);
  }

  TEST_CASE("symmetrization is an exact isometry with left inverse") {
    auto rng = testing::rng_for(157);
    for (int k = 0; k < 50; ++k) {
      const std::size_t d = static_cast<std::size_t>(testing::uniform_int(rng, 1, 3));
      const RationalSeries f = testing::random_rational_polynomial(rng, d, 6, 5);
      const RationalNCSeries v = symmetrize(f);
      CHECK(nc_norm_sq(v) == da_norm_sq(f));
      CHECK(restrict_to_ball(v) == f);
      CHECK(is_symmetric(v));
    }
  }

  TEST_CASE("floating symmetrization") {
    auto rng = testing::rng_for(163);
    for (int k = 0; k < 20; ++k) {
      const PowerSeries f = testing::random_polynomial(rng, 2, 5, 5);
      const NCSeries v = symmetrize(f);
      CHECK(nc_norm_sq(v) == doctest::Approx(da_norm_sq(f)).epsilon(1e-12));
      CHECK(is_symmetric(v, 1e-14));
      const PowerSeries back = restrict_to_ball(v);
      for (const auto& [alpha, c] : f) CHECK(std::abs(back.coefficient(alpha) - c) < 1e-12);
    }
  }

  TEST_CASE("antisymmetric element restricts to zero") {
    RationalNCSeries a(2);
    a.add_term(Word{0, 1}, 1);
    a.add_term(Word{1, 0}, -1);
    CHECK_FALSE(is_symmetric(a));
    CHECK(restrict_to_ball(a).size() == 0);
    CHECK(nc_norm_sq(a) == 2);
  }

  TEST_CASE("scalar evaluation reduces to the commutative function") {
    auto rng = testing::rng_for(167);
    for (int k = 0; k < 20; ++k) {
      const std::size_t d = static_cast<std::size_t>(testing::uniform_int(rng, 1, 3));
      const PowerSeries f = testing::random_polynomial(rng, d, 5, 5);
      const Point z = testing::random_point(rng, d, 0.9);
      std::vector<Matrix> ms;
      for (std::size_t i = 0; i < d; ++i) ms.push_back(Matrix::Constant(1, 1, z[i]));
      const MatrixTuple x(std::move(ms));
      CHECK(std::abs(nc_eval(symmetrize(f), x)(0, 0) - eval_series(f, z)) < 1e-12);
    }
  }

  TEST_CASE("evaluation bound on row contractions") {
    auto rng = testing::rng_for(173);
    for (int k = 0; k < 100; ++k) {
      const std::size_t d = static_cast<std::size_t>(testing::uniform_int(rng, 1, 3));
      const Eigen::Index n = testing::uniform_int(rng, 1, 4);
      const MatrixTuple x = random_row_contraction(rng, d, n, testing::uniform(rng, 0.1, 0.95));
      NCSeries f(d);
      for (int j = 0; j < 6; ++j) {
        const MultiIndex alpha = testing::random_index(rng, d, 5);
        const auto ws = words_of(alpha);
        f.add_term(ws[static_cast<std::size_t>(testing::uniform_int(rng, 0, int(ws.size()) - 1))],
                   random_complex(rng));
      }
      const double lhs = std::pow(linalg::spectral_norm(nc_eval(f, x)), 2);
      CHECK(lhs <= nc_eval_bound_sq(f, x) * (1 + 1e-10));
    }
    const MatrixTuple sphere(std::vector<Matrix>{Matrix::Identity(1, 1)});
    NCSeries one(1);
    one.add_term(Word{}, 1.0);
    CHECK(std::isinf(nc_eval_bound_sq(one, sphere)));
  }

  TEST_CASE("nc kernel expansion") {
    // sum_w conj(w(y)) x^w evaluated at x equals 1/(1 - <x, y>) for scalars.
    const Point xz{Complex(0.3, 0.1), Complex(-0.2, 0.25)};
    const Point yz{Complex(0.1, -0.4), Complex(0.35, 0.05)};
    NCSeries k(2);
    for (unsigned n = 0; n <= 16; ++n)
      for (const auto& alpha : enumerate_degree(2, n))
        for (const auto& w : words_of(alpha)) {
          Complex yw = 1.0;
          for (unsigned letter : w.letters()) yw *= yz[letter];
          k.add_term(w, std::conj(yw));
        }
    const MatrixTuple x(std::vector<Matrix>{Matrix::Constant(1, 1, xz[0]), Matrix::Constant(1, 1, xz[1])});
    CHECK(std::abs(nc_eval(k, x)(0, 0) - kernel_eval(xz, yz)) < 1e-10);
  }
}
