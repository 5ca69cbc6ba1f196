#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "pickwick/core/linalg.hpp"
#include "pickwick/core/monomial_basis.hpp"
#include "pickwick/core/rational.hpp"

namespace pickwick {

/// Sparse exact matrix: (row, col) -> value, zeros never stored.
class ExactMatrix {
 public:
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Rational at(std::size_t r, std::size_t c) const;
  void add(std::size_t r, std::size_t c, const Rational& v);
  const std::map<std::pair<std::size_t, std::size_t>, Rational>& entries() const noexcept {
    return entries_;
  }
  bool is_diagonal() const;

  friend ExactMatrix operator*(const ExactMatrix& x, const ExactMatrix& y);
  friend ExactMatrix operator-(const ExactMatrix& x, const ExactMatrix& y);
  friend ExactMatrix operator+(const ExactMatrix& x, const ExactMatrix& y);

  /// Leading k x k block.
  ExactMatrix leading(std::size_t k) const;
  bool operator==(const ExactMatrix& other) const = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::map<std::pair<std::size_t, std::size_t>, Rational> entries_;
};

/// M_{z_i} and M_{z_i}^* on degree <= N polynomials in the monomial basis
/// (action on coefficient vectors; M_{z_i} drops terms leaving degree N).
ExactMatrix shift_exact(const MonomialBasis& basis, std::size_t i);
ExactMatrix shift_adjoint_exact(const MonomialBasis& basis, std::size_t i);

/// M_{z_j}^* M_{z_i} - M_{z_i} M_{z_j}^* on |alpha| <= N, in the monomial
/// basis, computed on a degree N+1 host so no truncation enters. 0-based i, j.
ExactMatrix toeplitz_commutator(std::size_t d, std::size_t i, std::size_t j, unsigned cutoff);

/// Same operator in the orthonormal basis, double precision.
Matrix toeplitz_commutator_orthonormal(std::size_t d, std::size_t i, std::size_t j, unsigned cutoff);

/// (|alpha| - alpha_i)/(|alpha|(|alpha|+1)) for alpha != 0, and 1 at alpha = 0.
Rational commutator_diagonal_closed_form(const MultiIndex& alpha, std::size_t i);

/// sum_i M_{z_i} M_{z_i}^* on degree <= N (host N+1), exact.
ExactMatrix row_gram_exact(std::size_t d, unsigned cutoff);

struct EssentialNormalityReport {
  std::size_t dimension = 0;
  std::vector<MultiIndex> generators;
  double p = 0.0;
  unsigned cutoff = 0;
  /// Basis of the quotient (monomials not divisible by any generator).
  std::vector<MultiIndex> quotient_basis;
  /// For each pair (j, k), schatten[j*d + k][n] is the Schatten-p norm of the
  /// commutator S_j S_k^* - S_k^* S_j truncated to degrees <= n, n = 0..N.
  std::vector<std::vector<double>> schatten;
  /// max over pairs, per n.
  std::vector<double> max_schatten;
};

/// Exploratory Schatten-p profile of the cross-commutators of the compressed
/// shifts on the quotient by a monomial ideal. Throws NotMonomialIdeal for an
/// empty generator list or a constant generator.
EssentialNormalityReport essential_normality_probe(const std::vector<MultiIndex>& generators,
                                                   unsigned cutoff, double p);

}  // namespace pickwick
