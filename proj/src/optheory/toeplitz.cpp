#include "pickwick/optheory/toeplitz.hpp"

#include <algorithm>

#include "pickwick/error.hpp"
#include "pickwick/multiplier/multiplier.hpp"

namespace pickwick {

Rational ExactMatrix::at(std::size_t r, std::size_t c) const {
  auto it = entries_.find({r, c});
  return it == entries_.end() ? Rational(0) : it->second;
}

void ExactMatrix::add(std::size_t r, std::size_t c, const Rational& v) {
  if (r >= rows_ || c >= cols_) throw Error(ErrorCode::SizeMismatch, "exact matrix index out of range");
  if (sgn(v) == 0) return;
  auto [it, inserted] = entries_.try_emplace({r, c}, v);
  if (!inserted) it->second += v;
  if (sgn(it->second) == 0) entries_.erase(it);
}

bool ExactMatrix::is_diagonal() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const auto& e) { return e.first.first == e.first.second; });
}

ExactMatrix operator*(const ExactMatrix& x, const ExactMatrix& y) {
  if (x.cols_ != y.rows_) throw Error(ErrorCode::SizeMismatch, "exact product shapes");
  std::map<std::size_t, std::vector<std::pair<std::size_t, Rational>>> by_row;
  for (const auto& [rc, v] : y.entries_) by_row[rc.first].emplace_back(rc.second, v);
  ExactMatrix out(x.rows_, y.cols_);
  for (const auto& [rc, v] : x.entries_) {
    auto it = by_row.find(rc.second);
    if (it == by_row.end()) continue;
    for (const auto& [c, w] : it->second) out.add(rc.first, c, v * w);
  }
  return out;
}

ExactMatrix operator+(const ExactMatrix& x, const ExactMatrix& y) {
  if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw Error(ErrorCode::SizeMismatch, "exact sum shapes");
  ExactMatrix out = x;
  for (const auto& [rc, v] : y.entries_) out.add(rc.first, rc.second, v);
  return out;
}

ExactMatrix operator-(const ExactMatrix& x, const ExactMatrix& y) {
  if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw Error(ErrorCode::SizeMismatch, "exact difference shapes");
  ExactMatrix out = x;
  for (const auto& [rc, v] : y.entries_) out.add(rc.first, rc.second, -v);
  return out;
}

ExactMatrix ExactMatrix::leading(std::size_t k) const {
  ExactMatrix out(std::min(k, rows_), std::min(k, cols_));
  for (const auto& [rc, v] : entries_)
    if (rc.first < out.rows_ && rc.second < out.cols_) out.entries_.emplace(rc, v);
  return out;
}

ExactMatrix shift_exact(const MonomialBasis& basis, std::size_t i) {
  ExactMatrix m(basis.size(), basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (auto to = basis.index_of(basis[k].incremented(i))) m.add(*to, k, Rational(1));
  return m;
}

ExactMatrix shift_adjoint_exact(const MonomialBasis& basis, std::size_t i) {
  ExactMatrix m(basis.size(), basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (auto hit = adjoint_monomial_apply(i, basis[k])) m.add(*basis.index_of(hit->first), k, hit->second);
  return m;
}

namespace {

void check_coordinate(std::size_t d, std::size_t i) {
  if (i >= d) throw Error(ErrorCode::InvalidArgument, "coordinate index out of range");
}

}  // namespace

ExactMatrix toeplitz_commutator(std::size_t d, std::size_t i, std::size_t j, unsigned cutoff) {
  check_coordinate(d, i);
  check_coordinate(d, j);
  const MonomialBasis host(d, cutoff + 1);
  const ExactMatrix mi = shift_exact(host, i);
  const ExactMatrix mj_star = shift_adjoint_exact(host, j);
  const std::size_t keep = MonomialBasis(d, cutoff).size();
  return (mj_star * mi - mi * mj_star).leading(keep);
}

Matrix toeplitz_commutator_orthonormal(std::size_t d, std::size_t i, std::size_t j, unsigned cutoff) {
  check_coordinate(d, i);
  check_coordinate(d, j);
  const Matrix mi = compression(PowerSeries::coordinate(d, i), cutoff + 1).matrix;
  const Matrix mj_star = compression(PowerSeries::coordinate(d, j), cutoff + 1).matrix.adjoint();
  const Eigen::Index keep = static_cast<Eigen::Index>(MonomialBasis(d, cutoff).size());
  return (mj_star * mi - mi * mj_star).topLeftCorner(keep, keep);
}

Rational commutator_diagonal_closed_form(const MultiIndex& alpha, std::size_t i) {
  const unsigned n = alpha.degree();
  if (n == 0) return Rational(1);
  return make_rational(static_cast<long>(n - alpha[i]), static_cast<long>(n) * static_cast<long>(n + 1));
}

ExactMatrix row_gram_exact(std::size_t d, unsigned cutoff) {
  const MonomialBasis host(d, cutoff + 1);
  ExactMatrix acc(host.size(), host.size());
  for (std::size_t i = 0; i < d; ++i) acc = acc + shift_exact(host, i) * shift_adjoint_exact(host, i);
  return acc.leading(MonomialBasis(d, cutoff).size());
}

EssentialNormalityReport essential_normality_probe(const std::vector<MultiIndex>& generators, unsigned cutoff,
                                                   double p) {
  if (generators.empty()) throw Error(ErrorCode::NotMonomialIdeal, "empty generator list");
  const std::size_t d = generators.front().dimension();
  for (const auto& g : generators) {
    if (g.dimension() != d) throw Error(ErrorCode::DimensionMismatch, "generator dimensions differ");
    if (g.degree() == 0) throw Error(ErrorCode::NotMonomialIdeal, "constant generator gives the whole ring");
  }
  if (!(p > 0.0)) throw Error(ErrorCode::InvalidArgument, "Schatten exponent must be positive");

  EssentialNormalityReport rep;
  rep.dimension = d;
  rep.generators = generators;
  rep.p = p;
  rep.cutoff = cutoff;

  const MonomialBasis host(d, cutoff + 1);
  std::vector<Eigen::Index> q;
  std::vector<Eigen::Index> degree_end(cutoff + 1, 0);
  for (std::size_t k = 0; k < host.size(); ++k) {
    const MultiIndex& alpha = host[k];
    const bool in_ideal =
        std::any_of(generators.begin(), generators.end(), [&](const MultiIndex& g) { return alpha.divisible_by(g); });
    if (in_ideal) continue;
    if (alpha.degree() <= cutoff) {
      rep.quotient_basis.push_back(alpha);
      for (unsigned n = alpha.degree(); n <= cutoff; ++n) degree_end[n] = static_cast<Eigen::Index>(rep.quotient_basis.size());
    }
    q.push_back(static_cast<Eigen::Index>(k));
  }

  std::vector<Matrix> s;
  for (std::size_t i = 0; i < d; ++i) {
    const Matrix mi = compression(PowerSeries::coordinate(d, i), cutoff + 1).matrix;
    s.push_back(mi(q, q));
  }
  const Eigen::Index keep = static_cast<Eigen::Index>(rep.quotient_basis.size());
  rep.schatten.assign(d * d, std::vector<double>(cutoff + 1, 0.0));
  rep.max_schatten.assign(cutoff + 1, 0.0);
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t k = 0; k < d; ++k) {
      const Matrix c = (s[j] * s[k].adjoint() - s[k].adjoint() * s[j]).topLeftCorner(keep, keep);
      for (unsigned n = 0; n <= cutoff; ++n) {
        const Eigen::Index m = degree_end[n];
        const double v = m > 0 ? linalg::schatten_norm(c.topLeftCorner(m, m), p) : 0.0;
        rep.schatten[j * d + k][n] = v;
        rep.max_schatten[n] = std::max(rep.max_schatten[n], v);
      }
    }
  }
  return rep;
}

}  // namespace pickwick
