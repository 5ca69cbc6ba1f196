#include "pickwick/ncfock/ncfock.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

namespace pickwick {

MultiIndex Word::abelianization(std::size_t d) const {
  std::vector<unsigned> counts(d, 0);
  for (unsigned letter : letters_) {
    if (letter >= d) throw Error(ErrorCode::DimensionMismatch, "word letter out of range");
    ++counts[letter];
  }
  return MultiIndex(std::move(counts));
}

std::strong_ordering Word::operator<=>(const Word& other) const {
  if (auto c = letters_.size() <=> other.letters_.size(); c != 0) return c;
  return letters_ <=> other.letters_;
}

std::vector<Word> words_of(const MultiIndex& alpha) {
  std::vector<unsigned> letters;
  for (std::size_t i = 0; i < alpha.dimension(); ++i) letters.insert(letters.end(), alpha[i], static_cast<unsigned>(i));
  std::vector<Word> out;
  do {
    out.emplace_back(letters);
  } while (std::next_permutation(letters.begin(), letters.end()));
  return out;
}

namespace {

template <typename Scalar, typename Weight>
BasicNCSeries<Scalar> symmetrize_impl(const BasicSeries<Scalar>& f, Weight weight) {
  BasicNCSeries<Scalar> out(f.dimension());
  for (const auto& [alpha, c] : f) {
    const Scalar w = c * weight(alpha);
    for (const Word& word : words_of(alpha)) out.add_term(word, w);
  }
  return out;
}

template <typename Scalar>
BasicSeries<Scalar> restrict_impl(const BasicNCSeries<Scalar>& f) {
  BasicSeries<Scalar> out(f.dimension());
  for (const auto& [word, c] : f) out.add_term(word.abelianization(f.dimension()), c);
  return out;
}

template <typename Scalar, typename Close>
bool symmetric_impl(const BasicNCSeries<Scalar>& f, Close close) {
  std::set<MultiIndex> seen;
  for (const auto& [word, c] : f) {
    const MultiIndex alpha = word.abelianization(f.dimension());
    if (!seen.insert(alpha).second) continue;
    for (const Word& other : words_of(alpha))
      if (!close(f.coefficient(other), c)) return false;
  }
  return true;
}

}  // namespace

NCSeries symmetrize(const PowerSeries& f) {
  return symmetrize_impl(f, [](const MultiIndex& a) { return Complex(to_double(factorial_ratio(a)), 0.0); });
}

RationalNCSeries symmetrize(const RationalSeries& f) {
  return symmetrize_impl(f, [](const MultiIndex& a) { return factorial_ratio(a); });
}

PowerSeries restrict_to_ball(const NCSeries& f) { return restrict_impl(f); }
RationalSeries restrict_to_ball(const RationalNCSeries& f) { return restrict_impl(f); }

double nc_norm_sq(const NCSeries& f) {
  double acc = 0.0;
  for (const auto& [word, c] : f) acc += std::norm(c);
  return acc;
}

Rational nc_norm_sq(const RationalNCSeries& f) {
  Rational acc(0);
  for (const auto& [word, c] : f) acc += c * c;
  return acc;
}

bool is_symmetric(const NCSeries& f, double tol) {
  return symmetric_impl(f, [tol](const Complex& a, const Complex& b) { return std::abs(a - b) <= tol; });
}

bool is_symmetric(const RationalNCSeries& f) {
  return symmetric_impl(f, [](const Rational& a, const Rational& b) { return a == b; });
}

Matrix nc_eval(const NCSeries& f, const MatrixTuple& x) {
  if (f.dimension() != x.dimension()) throw Error(ErrorCode::DimensionMismatch, "series and tuple dimensions");
  const Eigen::Index n = x.size();
  Matrix acc = Matrix::Zero(n, n);
  for (const auto& [word, c] : f) {
    Matrix prod = Matrix::Identity(n, n);
    for (unsigned letter : word.letters()) prod = prod * x[letter];
    acc += c * prod;
  }
  return acc;
}

double nc_eval_bound_sq(const NCSeries& f, const MatrixTuple& x) {
  const double r = x.row_norm();
  if (r >= 1.0) return std::numeric_limits<double>::infinity();
  return nc_norm_sq(f) / (1.0 - r * r);
}

}  // namespace pickwick
