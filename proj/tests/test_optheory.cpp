#include <doctest.h>

#include <functional>
#include <optional>

#include "pickwick/error.hpp"
#include "pickwick/multiplier/multiplier.hpp"
#include "pickwick/optheory/dilation.hpp"
#include "pickwick/optheory/generators.hpp"
#include "pickwick/optheory/matrix_tuple.hpp"
#include "support.hpp"

using namespace pickwick;

namespace {

std::optional<ErrorCode> code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

MatrixTuple scalar_tuple(std::vector<Complex> z) {
  std::vector<Matrix> ms;
  for (auto c : z) ms.push_back(Matrix::Constant(1, 1, c));
  return MatrixTuple(std::move(ms));
}

MatrixTuple zero_tuple(std::size_t d, Eigen::Index n) {
  return MatrixTuple(std::vector<Matrix>(d, Matrix::Zero(n, n)));
}

}  // namespace

TEST_SUITE("optheory") {
  TEST_CASE("row norm examples") {
    for (std::size_t d = 1; d <= 4; ++d) {
      const MatrixTuple t(std::vector<Matrix>(d, Matrix::Identity(3, 3) / std::sqrt(double(d))));
      CHECK(row_norm(t) == doctest::Approx(1.0));
    }
    CHECK(row_norm(zero_tuple(2, 3)) == 0.0);
    CHECK(row_norm(scalar_tuple({Complex(0.3, 0.4)})) == doctest::Approx(0.5));
    auto rng = testing::rng_for(103);
    const MatrixTuple t = random_commuting_tuple(rng, 3, 4, 0.7, CommutingFamily::Polynomial);
    Matrix row(4, 12);
    for (int i = 0; i < 3; ++i) row.middleCols(4 * i, 4) = t[i];
    CHECK(row_norm(t) == doctest::Approx(linalg::spectral_norm(row)));
    CHECK(t.row_norm() == doctest::Approx(0.7));
  }

  TEST_CASE("tuple validation") {
    CHECK(code_of([] { MatrixTuple(std::vector<Matrix>{Matrix::Zero(2, 2), Matrix::Zero(3, 3)}); }) ==
          ErrorCode::SizeMismatch);
    Matrix a = Matrix::Zero(2, 2), b = Matrix::Zero(2, 2);
    a(0, 1) = 1.0;
    b(1, 0) = 1.0;
    const MatrixTuple nc(std::vector<Matrix>{a, b});
    CHECK_FALSE(nc.is_commuting());
    CHECK(code_of([&] { nc.require_commuting(); }) == ErrorCode::NotCommuting);
    CHECK_FALSE(nc.commuting_checked());
  }

  TEST_CASE("generated tuples commute and hit the row norm") {
    auto rng = testing::rng_for(107);
    for (auto family : {CommutingFamily::Polynomial, CommutingFamily::Diagonalizable}) {
      for (int k = 0; k < 20; ++k) {
        const std::size_t d = static_cast<std::size_t>(testing::uniform_int(rng, 1, 3));
        const Eigen::Index n = testing::uniform_int(rng, 1, 4);
        const double r = testing::uniform(rng, 0.1, 0.95);
        const MatrixTuple t = random_commuting_tuple(rng, d, n, r, family);
        CHECK(t.is_commuting());
        CHECK(t.row_norm() == doctest::Approx(r).epsilon(1e-12));
      }
    }
  }

  TEST_CASE("theta map") {
    const MatrixTuple t = scalar_tuple({0.6, 0.0});
    CHECK(theta_apply(t, Matrix::Zero(1, 1)).norm() == 0.0);
    const MatrixTuple u = scalar_tuple({std::polar(1.0, 0.3)});
    for (unsigned k = 0; k <= 5; ++k) CHECK(std::abs(theta_power(u, k)(0, 0) - 1.0) < 1e-14);
    CHECK(code_of([&] { theta_apply(t, Matrix::Zero(2, 2)); }) == ErrorCode::SizeMismatch);
  }

  TEST_CASE("purity decay") {
    auto rng = testing::rng_for(109);
    for (int k = 0; k < 10; ++k) {
      const double r = testing::uniform(rng, 0.3, 0.95);
      const MatrixTuple t = random_commuting_tuple(rng, 2, 3, r, CommutingFamily::Diagonalizable);
      Matrix a = Matrix::Identity(3, 3);
      for (unsigned j = 1; j <= 50; ++j) {
        a = theta_apply(t, a);
        CHECK(linalg::spectral_norm(a) <= std::pow(r, 2.0 * j) * (1 + 1e-9) + 1e-300);
      }
    }
  }

  TEST_CASE("defect root") {
    CHECK((defect_root(zero_tuple(2, 3)) - Matrix::Identity(3, 3)).norm() == 0.0);
    const MatrixTuple sphere(std::vector<Matrix>(2, Matrix::Identity(2, 2) / std::sqrt(2.0)));
    CHECK(defect_root(sphere).norm() < 1e-7);
    auto rng = testing::rng_for(113);
    const MatrixTuple t = random_commuting_tuple(rng, 3, 4, 0.8, CommutingFamily::Polynomial);
    const Matrix delta = defect_root(t);
    const Matrix id = Matrix::Identity(4, 4);
    CHECK((delta * delta - (id - theta_apply(t, id))).norm() <= 1e-12);
    CHECK(code_of([&] { defect_root(t.scaled(1.5)); }) == ErrorCode::NotRowContraction);
  }

  TEST_CASE("tuple monomials and polynomial evaluation") {
    auto rng = testing::rng_for(127);
    const MatrixTuple t = random_commuting_tuple(rng, 2, 3, 0.9, CommutingFamily::Polynomial);
    const auto pw = tuple_monomials(t, 3);
    const MonomialBasis b(2, 3);
    CHECK(pw.size() == b.size());
    CHECK((pw[*b.index_of({2, 1})] - t[0] * t[1] * t[0]).norm() < 1e-12);
    PowerSeries p(2);
    p.add_term({0, 0}, 2.0);
    p.add_term({1, 1}, Complex(0, 1));
    const Matrix expected = 2.0 * Matrix::Identity(3, 3) + Complex(0, 1) * t[0] * t[1];
    CHECK((eval_polynomial(p, t) - expected).norm() < 1e-12);
    const MatrixTuple s = scalar_tuple({0.2, Complex(0.1, 0.3)});
    const PowerSeries q = testing::random_polynomial(rng, 2, 4, 5);
    CHECK(std::abs(eval_polynomial(q, s)(0, 0) - eval_series(q, Point{Complex(0.2), Complex(0.1, 0.3)})) < 1e-13);
  }

  TEST_CASE("dilation examples") {
    const Matrix v0 = dilation_isometry(zero_tuple(2, 2), 0);
    CHECK((v0 - Matrix::Identity(2, 2)).norm() == 0.0);

    const unsigned n = 12;
    const Matrix v = dilation_isometry(scalar_tuple({0.5}), n);
    REQUIRE(v.rows() == n + 1);
    for (unsigned k = 0; k <= n; ++k) CHECK(std::abs(v(k, 0) - std::sqrt(0.75) * std::pow(0.5, k)) < 1e-15);
    CHECK(std::abs(v.squaredNorm() - (1.0 - std::pow(0.25, n + 1))) < 1e-14);
  }

  TEST_CASE("dilation telescoping and intertwining") {
    auto rng = testing::rng_for(131);
    for (int k = 0; k < 10; ++k) {
      const std::size_t d = static_cast<std::size_t>(testing::uniform_int(rng, 1, 3));
      const Eigen::Index m = testing::uniform_int(rng, 1, 4);
      const auto family = k % 2 ? CommutingFamily::Polynomial : CommutingFamily::Diagonalizable;
      const MatrixTuple t = random_commuting_tuple(rng, d, m, 0.8, family);
      for (unsigned n : {0u, 1u, 5u, 20u}) {
        const DilationReport r = dilation_report(t, n);
        CHECK(r.isometry_defect <= r.purity_tail + 1e-9);
        CHECK(r.purity_tail <= std::pow(0.8, 2.0 * (n + 1)) * (1 + 1e-9));
        for (double res : r.intertwining_residual) CHECK(res <= 1e-10);
      }
    }
    CHECK(code_of([] { intertwine_residual(zero_tuple(2, 2), Matrix::Zero(3, 2), 2); }) ==
          ErrorCode::ShapeMismatch);
    for (double res : dilation_report(zero_tuple(3, 2), 4).intertwining_residual) CHECK(res == 0.0);
  }

  TEST_CASE("von neumann examples") {
    auto rng = testing::rng_for(137);
    const MatrixTuple t = random_commuting_tuple(rng, 2, 3, 0.9, CommutingFamily::Polynomial);
    const VnReport r = vn_report(t, PowerSeries::coordinate(2, 0), 4);
    CHECK(r.lhs <= 1.0 + 1e-12);
    CHECK(r.rhs_curve.back() == doctest::Approx(1.0));
    CHECK(r.verdict == VnVerdict::Satisfied);

    const VnReport one = vn_report(scalar_tuple({0.7}), PowerSeries::coordinate(1, 0), 6);
    for (std::size_t k = 1; k < one.rhs_curve.size(); ++k) CHECK(one.rhs_curve[k] == doctest::Approx(1.0));
    CHECK(one.rhs_curve[0] == 0.0);
    CHECK(code_of([&] { vn_report(t.scaled(1.2), PowerSeries::coordinate(2, 0), 2); }) ==
          ErrorCode::NotRowContraction);
    CHECK(std::string(to_string(VnVerdict::Inconclusive)) == "inconclusive");
  }

  TEST_CASE("von neumann sharpness on the shift compressions") {
    auto rng = testing::rng_for(139);
    for (int k = 0; k < 10; ++k) {
      const std::size_t d = static_cast<std::size_t>(testing::uniform_int(rng, 1, 3));
      const unsigned n = 4;
      const PowerSeries p = testing::random_polynomial(rng, d, 3, 4);
      const MatrixTuple s = shift_compressions(d, n);
      CHECK(s.row_norm() <= 1.0 + 1e-12);
      const VnReport r = vn_report(s, p, n);
      CHECK(std::abs(r.lhs - r.rhs_curve.back()) <= 1e-10 * (1.0 + r.lhs));
      CHECK(r.verdict == VnVerdict::Satisfied);
    }
  }

  TEST_CASE("von neumann on random tuples") {
    auto rng = testing::rng_for(149);
    for (int k = 0; k < 30; ++k) {
      const std::size_t d = static_cast<std::size_t>(testing::uniform_int(rng, 1, 3));
      const Eigen::Index m = testing::uniform_int(rng, 1, 4);
      const MatrixTuple t = random_commuting_tuple(rng, d, m, testing::uniform(rng, 0.2, 1.0),
                                                   k % 2 ? CommutingFamily::Polynomial : CommutingFamily::Diagonalizable);
      const PowerSeries p = testing::random_polynomial(rng, d, 4, 4);
      CHECK(vn_report(t, p, 8).verdict != VnVerdict::Violation);
    }
  }
}
