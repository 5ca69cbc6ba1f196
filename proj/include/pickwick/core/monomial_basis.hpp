#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "pickwick/core/multi_index.hpp"

namespace pickwick {

/// Monomials of degree <= N in d variables, indexed in graded-lex order.
class MonomialBasis {
 public:
  MonomialBasis(std::size_t dimension, unsigned max_degree);

  std::size_t dimension() const noexcept { return dimension_; }
  unsigned max_degree() const noexcept { return max_degree_; }
  std::size_t size() const noexcept { return monomials_.size(); }

  const MultiIndex& operator[](std::size_t k) const { return monomials_[k]; }
  const std::vector<MultiIndex>& monomials() const noexcept { return monomials_; }

  std::optional<std::size_t> index_of(const MultiIndex& alpha) const;

  /// First index of the monomials of degree n.
  std::size_t degree_offset(unsigned n) const { return offsets_.at(n); }

  /// sqrt(alpha!/|alpha|!), the norm of z^alpha, for every basis element.
  const std::vector<double>& norms() const noexcept { return norms_; }

 private:
  std::size_t dimension_;
  unsigned max_degree_;
  std::vector<MultiIndex> monomials_;
  std::vector<std::size_t> offsets_;
  std::map<MultiIndex, std::size_t> lookup_;
  std::vector<double> norms_;
};

}  // namespace pickwick
