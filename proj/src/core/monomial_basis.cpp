#include "pickwick/core/monomial_basis.hpp"

#include <cmath>

namespace pickwick {

MonomialBasis::MonomialBasis(std::size_t dimension, unsigned max_degree)
    : dimension_(dimension), max_degree_(max_degree) {
  for (unsigned n = 0; n <= max_degree; ++n) {
    offsets_.push_back(monomials_.size());
    auto level = enumerate_degree(dimension, n);
    monomials_.insert(monomials_.end(), level.begin(), level.end());
  }
  offsets_.push_back(monomials_.size());
  norms_.reserve(monomials_.size());
  for (std::size_t k = 0; k < monomials_.size(); ++k) {
    lookup_.emplace(monomials_[k], k);
    norms_.push_back(std::sqrt(to_double(factorial_ratio(monomials_[k]))));
  }
}

std::optional<std::size_t> MonomialBasis::index_of(const MultiIndex& alpha) const {
  auto it = lookup_.find(alpha);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

}  // namespace pickwick
