#include "pickwick/io/fixtures.hpp"

#include <cmath>
#include <numbers>

#include <json.hpp>

#include "pickwick/core/multi_index.hpp"
#include "pickwick/daspace/daspace.hpp"
#include "pickwick/error.hpp"
#include "pickwick/optheory/toeplitz.hpp"
#include "pickwick/pick/classify.hpp"

namespace pickwick::io {

namespace {

using nlohmann::json;

constexpr unsigned kMonomialDegree = 8;
constexpr std::size_t kCoeffCount = 20;
constexpr unsigned kStirlingMax = 200;
constexpr unsigned kCommutatorCutoff = 6;

json monomial_norms() {
  json tables = json::array();
  for (std::size_t d : {2, 3}) {
    json rows = json::array();
    for (const auto& alpha : enumerate_up_to(d, kMonomialDegree))
      rows.push_back({{"alpha", alpha.exponents()}, {"norm_sq", to_string(factorial_ratio(alpha))}});
    tables.push_back({{"d", d}, {"max_degree", kMonomialDegree}, {"rows", rows}});
  }
  return {{"suite", "monomial-norms"}, {"tables", tables}};
}

std::vector<Rational> hardy_sobolev_exact(const Rational& a, std::size_t count) {
  std::vector<Rational> out{Rational(1)};
  for (std::size_t n = 1; n < count; ++n) {
    Rational next = out.back() * (a + Rational(static_cast<long>(n) - 1));
    next /= Rational(static_cast<long>(n));
    out.push_back(next);
  }
  return out;
}

json coefficient_row(const std::string& name, const std::vector<Rational>& a) {
  json c = json::array();
  for (const auto& q : one_minus_reciprocal_coeffs(a)) c.push_back(to_string(q));
  json as = json::array();
  for (const auto& q : a) as.push_back(to_string(q));
  return {{"kernel", name}, {"a", as}, {"c", c}};
}

json pick_coeffs() {
  json rows = json::array();
  std::vector<Rational> szego(kCoeffCount, Rational(1));
  rows.push_back(coefficient_row("szego", szego));
  std::vector<Rational> dirichlet, modified;
  for (std::size_t n = 0; n < kCoeffCount; ++n) {
    dirichlet.push_back(make_rational(1, static_cast<long>(n + 1)));
    modified.push_back(n == 0 ? Rational(1) : make_rational(1, static_cast<long>(n)));
  }
  rows.push_back(coefficient_row("dirichlet", dirichlet));
  rows.push_back(coefficient_row("modified-dirichlet", modified));
  for (long k = 1; k <= 20; ++k) {
    const Rational a = make_rational(k, 10);
    rows.push_back(coefficient_row("hardy-sobolev " + to_string(a), hardy_sobolev_exact(a, kCoeffCount)));
  }
  return {{"suite", "pick-coeffs"}, {"count", kCoeffCount}, {"rows", rows}};
}

json stirling() {
  json rows = json::array();
  for (unsigned n = 1; n <= kStirlingMax; ++n) {
    const Rational g = da_norm_sq(two_z1z2_power(n));
    const double ratio = to_double(g) / std::sqrt(std::numbers::pi * n);
    rows.push_back({{"n", n}, {"g", to_double(g)}, {"ratio", ratio}});
  }
  return {{"suite", "stirling"}, {"rows", rows}};
}

json commutator_diagonals() {
  json tables = json::array();
  for (std::size_t d : {1, 2, 3}) {
    const MonomialBasis basis(d, kCommutatorCutoff);
    json rows = json::array();
    for (std::size_t i = 0; i < d; ++i) {
      const ExactMatrix c = toeplitz_commutator(d, i, i, kCommutatorCutoff);
      for (std::size_t k = 0; k < basis.size(); ++k)
        rows.push_back({{"i", i + 1}, {"alpha", basis[k].exponents()}, {"value", to_string(c.at(k, k))}});
    }
    tables.push_back({{"d", d}, {"cutoff", kCommutatorCutoff}, {"rows", rows}});
  }
  return {{"suite", "commutator-diagonals"}, {"tables", tables}};
}

}  // namespace

const std::vector<std::string>& fixture_suites() {
  static const std::vector<std::string> names{"monomial-norms", "pick-coeffs", "stirling", "commutator-diagonals"};
  return names;
}

std::string fixture_emit(const std::string& suite) {
  json out;
  if (suite == "monomial-norms") out = monomial_norms();
  else if (suite == "pick-coeffs") out = pick_coeffs();
  else if (suite == "stirling") out = stirling();
  else if (suite == "commutator-diagonals") out = commutator_diagonals();
  else throw Error(ErrorCode::InvalidArgument, "unknown fixture suite '" + suite + "'");
  return out.dump(2) + "\n";
}

}  // namespace pickwick::io
