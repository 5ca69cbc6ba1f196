#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <vector>

#include "pickwick/core/linalg.hpp"
#include "pickwick/core/multi_index.hpp"
#include "pickwick/daspace/power_series.hpp"
#include "pickwick/optheory/matrix_tuple.hpp"

namespace pickwick {

/// Word in the letters 0..d-1 (the monomial x_{w_1} ... x_{w_r}).
/// Ordered by length, then lexicographically.
class Word {
 public:
  Word() = default;
  Word(std::vector<unsigned> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<unsigned> letters) : letters_(letters) {}

  std::size_t length() const noexcept { return letters_.size(); }
  const std::vector<unsigned>& letters() const noexcept { return letters_; }
  unsigned operator[](std::size_t k) const { return letters_[k]; }

  /// Letter counts.
  MultiIndex abelianization(std::size_t d) const;

  bool operator==(const Word&) const = default;
  std::strong_ordering operator<=>(const Word& other) const;

 private:
  std::vector<unsigned> letters_;
};

/// All words with abelianization alpha, in Word order.
std::vector<Word> words_of(const MultiIndex& alpha);

template <typename Scalar>
class BasicNCSeries {
 public:
  using container = std::map<Word, Scalar>;

  BasicNCSeries() = default;
  explicit BasicNCSeries(std::size_t dimension) : dimension_(dimension) {}

  std::size_t dimension() const noexcept { return dimension_; }
  const container& terms() const noexcept { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Scalar coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  void add_term(const Word& w, const Scalar& c) {
    for (unsigned letter : w.letters())
      if (letter >= dimension_)
        throw Error(ErrorCode::DimensionMismatch, "word letter out of range");
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) it->second += c;
    if (detail::is_zero(it->second)) terms_.erase(it);
  }

  bool operator==(const BasicNCSeries&) const = default;

 private:
  std::size_t dimension_ = 1;
  container terms_;
};

using NCSeries = BasicNCSeries<Complex>;
using RationalNCSeries = BasicNCSeries<Rational>;

/// V z^alpha = (alpha!/|alpha|!) sum_{alpha(w) = alpha} x^w.
NCSeries symmetrize(const PowerSeries& f);
RationalNCSeries symmetrize(const RationalSeries& f);

/// Coefficient at alpha is the sum of a_w over words with abelianization alpha.
PowerSeries restrict_to_ball(const NCSeries& f);
RationalSeries restrict_to_ball(const RationalNCSeries& f);

double nc_norm_sq(const NCSeries& f);
Rational nc_norm_sq(const RationalNCSeries& f);

/// True when coefficients are constant on each abelianization class.
bool is_symmetric(const NCSeries& f, double tol = 0.0);
bool is_symmetric(const RationalNCSeries& f);

/// F(X) = sum_w a_w X_{w_1} ... X_{w_r}.
Matrix nc_eval(const NCSeries& f, const MatrixTuple& x);

/// ||F||^2 / (1 - row_norm(X)^2); infinite when row_norm(X) >= 1.
double nc_eval_bound_sq(const NCSeries& f, const MatrixTuple& x);

}  // namespace pickwick
