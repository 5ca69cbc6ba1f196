#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "pickwick/core/rational.hpp"

namespace pickwick {

/// Exponent vector of a monomial z^alpha in d variables.
///
/// Ordering is graded lexicographic: lower total degree first, and within a
/// degree the lexicographically larger exponent vector first, so that for
/// d = 2, n = 2 the order is (2,0), (1,1), (0,2). Every matrix in the library
/// that is indexed by monomials uses this order.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::size_t dimension) : exponents_(dimension, 0) {}
  explicit MultiIndex(std::vector<unsigned> exponents);
  MultiIndex(std::initializer_list<unsigned> exponents)
      : MultiIndex(std::vector<unsigned>(exponents)) {}

  static MultiIndex unit(std::size_t dimension, std::size_t i);

  std::size_t dimension() const noexcept { return exponents_.size(); }
  unsigned degree() const noexcept { return degree_; }
  unsigned operator[](std::size_t i) const { return exponents_[i]; }
  const std::vector<unsigned>& exponents() const noexcept { return exponents_; }

  MultiIndex operator+(const MultiIndex& other) const;
  /// True when every entry of `other` is <= the corresponding entry here.
  bool divisible_by(const MultiIndex& other) const;
  /// this - other; requires divisible_by(other).
  MultiIndex operator-(const MultiIndex& other) const;

  MultiIndex incremented(std::size_t i) const;
  MultiIndex decremented(std::size_t i) const;

  bool operator==(const MultiIndex& other) const = default;
  std::strong_ordering operator<=>(const MultiIndex& other) const;

  std::string str() const;

 private:
  std::vector<unsigned> exponents_;
  unsigned degree_ = 0;
};

/// alpha! / |alpha|!, the squared Drury-Arveson norm of z^alpha.
Rational factorial_ratio(const MultiIndex& alpha);

/// |alpha|! / alpha!, the number of words in d letters whose letter counts
/// are alpha.
BigInt word_count(const MultiIndex& alpha);

/// All alpha with |alpha| = n in graded-lex order. Count is C(n+d-1, d-1).
std::vector<MultiIndex> enumerate_degree(std::size_t d, unsigned n);

/// All alpha with |alpha| <= n, concatenated by degree.
std::vector<MultiIndex> enumerate_up_to(std::size_t d, unsigned n);

BigInt binomial(unsigned n, unsigned k);

}  // namespace pickwick
