#include <doctest.h>

#include <set>

#include "pickwick/core/linalg.hpp"
#include "pickwick/core/monomial_basis.hpp"
#include "pickwick/core/multi_index.hpp"
#include "pickwick/error.hpp"
#include "support.hpp"

using namespace pickwick;

TEST_SUITE("core") {
  TEST_CASE("factorial ratio examples") {
    CHECK(factorial_ratio({1, 1}) == make_rational(1, 2));
    CHECK(factorial_ratio({0, 0, 0}) == 1);
    CHECK(factorial_ratio({2, 1}) == make_rational(1, 3));
    CHECK(factorial_ratio({1, 0, 0}) == 1);
    CHECK(factorial_ratio({3, 2, 1}) == make_rational(1, 60));
  }

  TEST_CASE("word count examples") {
    CHECK(word_count({1, 1}) == 2);
    CHECK(word_count({3, 0}) == 1);
    CHECK(word_count({2, 1}) == 3);
  }

  TEST_CASE("enumerate degree order and counts") {
    CHECK(enumerate_degree(2, 0) == std::vector<MultiIndex>{{0, 0}});
    CHECK(enumerate_degree(2, 2) == std::vector<MultiIndex>{{2, 0}, {1, 1}, {0, 2}});
    CHECK(enumerate_degree(3, 1).size() == 3);
    for (std::size_t d = 1; d <= 4; ++d)
      for (unsigned n = 0; n <= 7; ++n) CHECK(enumerate_degree(d, n).size() == binomial(n + d - 1, d - 1));
  }

  TEST_CASE("ratio times count is one and counts sum to d^n") {
    for (std::size_t d = 1; d <= 4; ++d) {
      for (unsigned n = 0; n <= 8; ++n) {
        BigInt total = 0;
        for (const auto& a : enumerate_degree(d, n)) {
          CHECK(factorial_ratio(a) * Rational(word_count(a)) == 1);
          total += word_count(a);
        }
        BigInt dn;
        mpz_ui_pow_ui(dn.get_mpz_t(), d, n);
        CHECK(total == dn);
      }
    }
  }

  TEST_CASE("enumeration is duplicate-free and strictly ordered") {
    for (std::size_t d = 1; d <= 3; ++d) {
      const auto all = enumerate_up_to(d, 6);
      std::set<MultiIndex> unique(all.begin(), all.end());
      CHECK(unique.size() == all.size());
      for (std::size_t k = 1; k < all.size(); ++k) CHECK(all[k - 1] < all[k]);
    }
  }

  TEST_CASE("multi-index arithmetic") {
    const MultiIndex a{2, 1, 0};
    CHECK(a.degree() == 3);
    CHECK(a + MultiIndex{0, 1, 4} == MultiIndex{2, 2, 4});
    CHECK(a.divisible_by({1, 1, 0}));
    CHECK_FALSE(a.divisible_by({0, 0, 1}));
    CHECK(a - MultiIndex{1, 0, 0} == MultiIndex{1, 1, 0});
    CHECK(a.incremented(2) == MultiIndex{2, 1, 1});
    CHECK(a.decremented(0) == MultiIndex{1, 1, 0});
    CHECK(MultiIndex::unit(3, 1) == MultiIndex{0, 1, 0});
    CHECK_THROWS_AS(a - MultiIndex({0, 0, 1}), Error);
  }

  TEST_CASE("monomial basis indexing") {
    const MonomialBasis b(2, 3);
    CHECK(b.size() == 10);
    CHECK(b.degree_offset(0) == 0);
    CHECK(b.degree_offset(2) == 3);
    CHECK(b[3] == MultiIndex{2, 0});
    CHECK(*b.index_of({0, 2}) == 5);
    CHECK_FALSE(b.index_of({4, 0}).has_value());
    for (std::size_t k = 0; k < b.size(); ++k)
      CHECK(b.norms()[k] == doctest::Approx(std::sqrt(to_double(factorial_ratio(b[k])))));
  }

  TEST_CASE("factorial and binomial") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(20) == BigInt("2432902008176640000"));
    CHECK(binomial(10, 3) == 120);
  }

  TEST_CASE("linalg helpers") {
    auto rng = testing::rng_for(11);
    Matrix g(4, 3);
    for (Eigen::Index i = 0; i < g.size(); ++i) g(i) = random_complex(rng);
    const Matrix psd = g * g.adjoint();

    const Matrix h = linalg::gram_factor(psd, 1e-12);
    CHECK(h.rows() == 3);
    CHECK((h.adjoint() * h - psd).norm() < 1e-10);

    bool ok = false;
    const Matrix root = linalg::psd_sqrt(psd, 1e-12, &ok);
    CHECK(ok);
    CHECK((root * root - psd).norm() < 1e-10);

    const Matrix q = linalg::range_basis(g, 1e-12);
    CHECK(q.cols() == 3);
    const Matrix c = linalg::complement_basis(q, 4);
    CHECK(c.cols() == 1);
    CHECK((q.adjoint() * c).norm() < 1e-12);

    const Matrix u = linalg::orthonormalize(g);
    CHECK((u.adjoint() * u - Matrix::Identity(3, 3)).norm() < 1e-12);

    const RealVector ev = linalg::hermitian_eigenvalues(psd);
    CHECK(ev(0) <= ev(3));
    CHECK(linalg::spectral_norm(psd) == doctest::Approx(ev(3)));
    CHECK(linalg::schatten_norm(Matrix::Identity(4, 4), 2.0) == doctest::Approx(2.0));
    CHECK(linalg::schatten_norm(psd, 1.0) == doctest::Approx(ev.sum()));
  }
}
