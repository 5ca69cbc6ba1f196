#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "pickwick/core/multi_index.hpp"
#include "pickwick/core/rational.hpp"
#include "pickwick/error.hpp"

namespace pickwick {

namespace detail {

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(const std::complex<double>& c) { return c == std::complex<double>(0.0); }

}  // namespace detail

/// Finitely supported power series sum a_alpha z^alpha in d variables.
///
/// Zero coefficients are never stored; iteration follows the graded-lex
/// monomial order.
template <typename Scalar>
class BasicSeries {
 public:
  using scalar_type = Scalar;
  using container = std::map<MultiIndex, Scalar>;

  BasicSeries() = default;
  explicit BasicSeries(std::size_t dimension) : dimension_(dimension) {
    if (dimension == 0) throw Error(ErrorCode::DimensionMismatch, "series dimension must be >= 1");
  }

  static BasicSeries constant(std::size_t dimension, const Scalar& c) {
    BasicSeries s(dimension);
    s.set(MultiIndex(dimension), c);
    return s;
  }

  static BasicSeries monomial(const MultiIndex& alpha, const Scalar& c = Scalar(1)) {
    BasicSeries s(alpha.dimension());
    s.set(alpha, c);
    return s;
  }

  /// z_i (0-based coordinate).
  static BasicSeries coordinate(std::size_t dimension, std::size_t i) {
    return monomial(MultiIndex::unit(dimension, i));
  }

  std::size_t dimension() const noexcept { return dimension_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const container& terms() const noexcept { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  Scalar coefficient(const MultiIndex& alpha) const {
    auto it = terms_.find(alpha);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  void set(const MultiIndex& alpha, const Scalar& c) {
    check_key(alpha);
    if (detail::is_zero(c)) {
      terms_.erase(alpha);
    } else {
      terms_[alpha] = c;
    }
  }

  void add_term(const MultiIndex& alpha, const Scalar& c) {
    check_key(alpha);
    auto [it, inserted] = terms_.try_emplace(alpha, c);
    if (!inserted) it->second += c;
    if (detail::is_zero(it->second)) terms_.erase(it);
  }

  /// Highest degree present; 0 for the zero series.
  unsigned degree() const {
    return terms_.empty() ? 0u : terms_.rbegin()->first.degree();
  }

  BasicSeries& operator+=(const BasicSeries& other) {
    check_same(other);
    for (const auto& [alpha, c] : other.terms_) add_term(alpha, c);
    return *this;
  }

  BasicSeries& operator-=(const BasicSeries& other) {
    check_same(other);
    for (const auto& [alpha, c] : other.terms_) add_term(alpha, -c);
    return *this;
  }

  BasicSeries& operator*=(const Scalar& s) {
    if (detail::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [alpha, c] : terms_) c *= s;
    return *this;
  }

  friend BasicSeries operator+(BasicSeries a, const BasicSeries& b) { return a += b; }
  friend BasicSeries operator-(BasicSeries a, const BasicSeries& b) { return a -= b; }
  friend BasicSeries operator*(BasicSeries a, const Scalar& s) { return a *= s; }
  friend BasicSeries operator*(const Scalar& s, BasicSeries a) { return a *= s; }

  friend BasicSeries operator*(const BasicSeries& a, const BasicSeries& b) {
    a.check_same(b);
    BasicSeries out(a.dimension_);
    for (const auto& [alpha, ca] : a.terms_)
      for (const auto& [beta, cb] : b.terms_) out.add_term(alpha + beta, ca * cb);
    return out;
  }

  BasicSeries pow(unsigned n) const {
    BasicSeries result = constant(dimension_, Scalar(1));
    BasicSeries base = *this;
    while (n > 0) {
      if (n & 1u) result = result * base;
      n >>= 1u;
      if (n > 0) base = base * base;
    }
    return result;
  }

  /// Terms of degree <= n.
  BasicSeries truncated(unsigned n) const {
    BasicSeries out(dimension_);
    for (const auto& [alpha, c] : terms_)
      if (alpha.degree() <= n) out.terms_.emplace(alpha, c);
    return out;
  }

  bool operator==(const BasicSeries& other) const = default;

 private:
  void check_key(const MultiIndex& alpha) const {
    if (alpha.dimension() != dimension_)
      throw Error(ErrorCode::DimensionMismatch, "multi-index " + alpha.str() + " does not match series dimension");
  }
  void check_same(const BasicSeries& other) const {
    if (other.dimension_ != dimension_)
      throw Error(ErrorCode::DimensionMismatch, "series dimensions differ");
  }

  std::size_t dimension_ = 1;
  container terms_;
};

using PowerSeries = BasicSeries<std::complex<double>>;
using RationalSeries = BasicSeries<Rational>;

PowerSeries to_complex(const RationalSeries& f);

}  // namespace pickwick
