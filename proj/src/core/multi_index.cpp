#include "pickwick/core/multi_index.hpp"

#include <numeric>

#include "pickwick/error.hpp"

namespace pickwick {

BigInt factorial(unsigned n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

BigInt binomial(unsigned n, unsigned k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

MultiIndex::MultiIndex(std::vector<unsigned> exponents)
    : exponents_(std::move(exponents)),
      degree_(std::accumulate(exponents_.begin(), exponents_.end(), 0u)) {}

MultiIndex MultiIndex::unit(std::size_t dimension, std::size_t i) {
  if (i >= dimension) throw Error(ErrorCode::InvalidArgument, "coordinate index out of range");
  MultiIndex e(dimension);
  e.exponents_[i] = 1;
  e.degree_ = 1;
  return e;
}

MultiIndex MultiIndex::operator+(const MultiIndex& other) const {
  if (other.dimension() != dimension())
    throw Error(ErrorCode::DimensionMismatch, "multi-index dimensions differ");
  MultiIndex out = *this;
  for (std::size_t k = 0; k < exponents_.size(); ++k) out.exponents_[k] += other.exponents_[k];
  out.degree_ += other.degree_;
  return out;
}

bool MultiIndex::divisible_by(const MultiIndex& other) const {
  if (other.dimension() != dimension()) return false;
  for (std::size_t k = 0; k < exponents_.size(); ++k)
    if (other.exponents_[k] > exponents_[k]) return false;
  return true;
}

MultiIndex MultiIndex::operator-(const MultiIndex& other) const {
  if (!divisible_by(other))
    throw Error(ErrorCode::InvalidArgument, str() + " is not divisible by " + other.str());
  MultiIndex out = *this;
  for (std::size_t k = 0; k < exponents_.size(); ++k) out.exponents_[k] -= other.exponents_[k];
  out.degree_ -= other.degree_;
  return out;
}

MultiIndex MultiIndex::incremented(std::size_t i) const {
  MultiIndex out = *this;
  ++out.exponents_.at(i);
  ++out.degree_;
  return out;
}

MultiIndex MultiIndex::decremented(std::size_t i) const {
  if (exponents_.at(i) == 0) throw Error(ErrorCode::InvalidArgument, "exponent already zero");
  MultiIndex out = *this;
  --out.exponents_[i];
  --out.degree_;
  return out;
}

std::strong_ordering MultiIndex::operator<=>(const MultiIndex& other) const {
  if (auto c = degree_ <=> other.degree_; c != 0) return c;
  if (auto c = exponents_.size() <=> other.exponents_.size(); c != 0) return c;
  // Larger exponent vector first within a degree.
  for (std::size_t k = 0; k < exponents_.size(); ++k)
    if (exponents_[k] != other.exponents_[k])
      return exponents_[k] > other.exponents_[k] ? std::strong_ordering::less
                                                 : std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string MultiIndex::str() const {
  std::string s = "(";
  for (std::size_t k = 0; k < exponents_.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(exponents_[k]);
  }
  return s + ")";
}

Rational factorial_ratio(const MultiIndex& alpha) {
  BigInt num = 1;
  for (unsigned e : alpha.exponents()) num *= factorial(e);
  Rational q(num, factorial(alpha.degree()));
  q.canonicalize();
  return q;
}

BigInt word_count(const MultiIndex& alpha) {
  BigInt den = 1;
  for (unsigned e : alpha.exponents()) den *= factorial(e);
  return factorial(alpha.degree()) / den;
}

namespace {

void fill_degree(std::vector<unsigned>& current, std::size_t pos, unsigned remaining,
                 std::vector<MultiIndex>& out) {
  if (pos + 1 == current.size()) {
    current[pos] = remaining;
    out.emplace_back(current);
    return;
  }
  for (unsigned e = remaining + 1; e-- > 0;) {
    current[pos] = e;
    fill_degree(current, pos + 1, remaining - e, out);
  }
}

}  // namespace

std::vector<MultiIndex> enumerate_degree(std::size_t d, unsigned n) {
  if (d == 0) throw Error(ErrorCode::InvalidArgument, "dimension must be >= 1");
  std::vector<MultiIndex> out;
  std::vector<unsigned> current(d, 0);
  fill_degree(current, 0, n, out);
  return out;
}

std::vector<MultiIndex> enumerate_up_to(std::size_t d, unsigned n) {
  std::vector<MultiIndex> out;
  for (unsigned k = 0; k <= n; ++k) {
    auto level = enumerate_degree(d, k);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace pickwick
