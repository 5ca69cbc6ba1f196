#include "pickwick/io/json.hpp"

#include <algorithm>

#include "pickwick/error.hpp"

namespace pickwick::io {

namespace {

json doubles(const std::vector<double>& v) { return json(v); }

json vectors(const std::vector<Vector>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(to_json(v));
  return out;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::InvalidArgument, what);
}

}  // namespace

json to_json(Complex c) { return json::array({c.real(), c.imag()}); }

json to_json(const Vector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_json(v(i)));
  return out;
}

json to_json(const Matrix& m) {
  json out = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

json to_json(const Point& z) { return to_json(z.coords()); }

json to_json(const MultiIndex& alpha) { return json(alpha.exponents()); }

json to_json(const PowerSeries& f) {
  json terms = json::array();
  for (const auto& [alpha, c] : f) terms.push_back({{"alpha", to_json(alpha)}, {"re", c.real()}, {"im", c.imag()}});
  return {{"d", f.dimension()}, {"terms", terms}};
}

json to_json(const RationalSeries& f) {
  json terms = json::array();
  for (const auto& [alpha, c] : f)
    terms.push_back({{"alpha", to_json(alpha)}, {"q", to_string(c)}, {"re", to_double(c)}, {"im", 0.0}});
  return {{"d", f.dimension()}, {"terms", terms}};
}

json to_json(const NCSeries& f) {
  json terms = json::array();
  for (const auto& [w, c] : f) {
    json word = json::array();
    for (unsigned letter : w.letters()) word.push_back(letter + 1);
    terms.push_back({{"word", word}, {"re", c.real()}, {"im", c.imag()}});
  }
  return {{"d", f.dimension()}, {"terms", terms}};
}

json to_json(const MatrixTuple& t) {
  json ms = json::array();
  for (const auto& m : t.matrices()) ms.push_back(to_json(m));
  return {{"d", t.dimension()}, {"n", t.size()}, {"matrices", ms}};
}

json to_json(const KernelCoefficients& k) {
  switch (k.family()) {
    case KernelFamily::DruryArveson: return "da";
    case KernelFamily::Dirichlet: return "dirichlet";
    case KernelFamily::ModifiedDirichlet: return "modified-dirichlet";
    case KernelFamily::HardySobolev: return {{"hardy-sobolev", k.parameter()}};
    case KernelFamily::Coefficients: return {{"coeffs", k.stored()}};
  }
  return nullptr;
}

json to_json(const PsdVerdict& v) {
  return {{"is_psd", v.is_psd}, {"min_eigenvalue", v.min_eigenvalue}, {"tolerance_used", v.tolerance_used}};
}

json to_json(const Realization& r) {
  return {{"dimension", r.dimension},
          {"state_dim", r.state_dim},
          {"input_dim", r.input_dim},
          {"output_dim", r.output_dim},
          {"A", to_json(r.a)},
          {"B", to_json(r.b)},
          {"C", to_json(r.c)},
          {"D", to_json(r.d)},
          {"isometry_residual", r.isometry_residual()},
          {"coisometry_residual", r.coisometry_residual()},
          {"unitarity_residual", r.unitarity_residual()},
          {"square", r.is_square()}};
}

json to_json(const PickSolution& s) {
  json nodes = json::array();
  for (const auto& z : s.realization_nodes) nodes.push_back(to_json(z));
  return {{"verdict", to_json(s.verdict)},
          {"realization", to_json(s.realization)},
          {"embedded", s.embedded},
          {"realization_nodes", nodes},
          {"kolmogorov_rank", s.kolmogorov_rank},
          {"gram_residual", s.gram_residual},
          {"interpolation_residual", s.interpolation_residual}};
}

json to_json(const CompletePickVerdict& v) {
  json first = v.first_violation ? json(*v.first_violation) : json(nullptr);
  return {{"pass", v.pass},
          {"first_violation", first},
          {"c", doubles(v.c)},
          {"tolerance_used", doubles(v.tolerance_used)},
          {"min_coefficient", v.min_coefficient},
          {"kaluza_applicable", v.kaluza_applicable},
          {"log_convex", v.log_convex}};
}

json to_json(const Embedding& e) {
  return {{"vectors", to_json(e.vectors)},
          {"rank", e.rank},
          {"reconstruction_residual", e.reconstruction_residual},
          {"verdict", to_json(e.verdict)}};
}

json to_json(const LeechSolution& s) {
  return {{"verdict", to_json(s.verdict)},
          {"psi_values", vectors(s.psi_values)},
          {"realization", to_json(s.realization)},
          {"kolmogorov_rank", s.kolmogorov_rank},
          {"gram_residual", s.gram_residual},
          {"residual", s.residual}};
}

json to_json(const CoronaSolution& s) {
  return {{"verdict", to_json(s.verdict)},
          {"delta", s.delta},
          {"psi_values", vectors(s.psi_values)},
          {"realization", to_json(s.realization)},
          {"column_norm_bound", s.column_norm_bound},
          {"residual", s.residual}};
}

json to_json(const DilationReport& r) {
  return {{"cutoff", r.cutoff},
          {"isometry_defect", r.isometry_defect},
          {"intertwining_residual", doubles(r.intertwining_residual)},
          {"purity_tail", r.purity_tail},
          {"row_norm", r.row_norm},
          {"tolerance", 1e-9}};
}

json to_json(const VnReport& r) {
  return {{"lhs", r.lhs},
          {"rhs_curve", doubles(r.rhs_curve)},
          {"verdict", to_string(r.verdict)},
          {"tolerance", r.tolerance},
          {"stabilization_tolerance", 1e-10}};
}

json to_json(const ExactMatrix& m) {
  json entries = json::array();
  for (const auto& [rc, v] : m.entries())
    entries.push_back({{"row", rc.first}, {"col", rc.second}, {"q", to_string(v)}, {"value", to_double(v)}});
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

json to_json(const EssentialNormalityReport& r) {
  json gens = json::array();
  for (const auto& g : r.generators) gens.push_back(to_json(g));
  json basis = json::array();
  for (const auto& a : r.quotient_basis) basis.push_back(to_json(a));
  json pairs = json::array();
  for (std::size_t j = 0; j < r.dimension; ++j)
    for (std::size_t k = 0; k < r.dimension; ++k)
      pairs.push_back({{"j", j + 1}, {"k", k + 1}, {"schatten", doubles(r.schatten[j * r.dimension + k])}});
  return {{"d", r.dimension},
          {"generators", gens},
          {"p", r.p},
          {"cutoff", r.cutoff},
          {"quotient_basis", basis},
          {"pairs", pairs},
          {"max_schatten", doubles(r.max_schatten)},
          {"exploratory", true}};
}

json to_json(const SequenceReport& r) {
  return {{"ws_epsilon", r.ws_epsilon},
          {"carleson_upper", r.carleson_upper},
          {"riesz_lower", r.riesz_lower},
          {"riesz_upper", r.riesz_upper},
          {"thresholds",
           {{"ws_epsilon", r.thresholds.ws_epsilon},
            {"carleson", r.thresholds.carleson},
            {"riesz_lower", r.thresholds.riesz_lower}}},
          {"weakly_separated", r.weakly_separated},
          {"carleson_bounded", r.carleson_bounded},
          {"riesz", r.riesz}};
}

json to_json(const Subsequence& s) {
  return {{"kept", s.kept},
          {"eta", s.eta},
          {"riesz_lower_bound", s.riesz_lower_bound},
          {"riesz_upper_bound", s.riesz_upper_bound}};
}

Complex complex_from(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  require(j.is_array() && j.size() == 2, "complex number must be [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

Vector vector_from(const json& j) {
  require(j.is_array(), "vector must be an array");
  Vector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = complex_from(j[i]);
  return v;
}

Matrix matrix_from(const json& j) {
  require(j.is_array() && !j.empty(), "matrix must be a non-empty array of rows");
  const std::size_t cols = j[0].size();
  Matrix m(static_cast<Eigen::Index>(j.size()), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (j[r].size() != cols) throw Error(ErrorCode::ShapeMismatch, "matrix rows have different lengths");
    for (std::size_t c = 0; c < cols; ++c)
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = complex_from(j[r][c]);
  }
  return m;
}

Point point_from(const json& j) { return Point(vector_from(j)); }

std::vector<Point> points_from(const json& j) {
  std::vector<Point> out;
  for (const auto& p : j) out.push_back(point_from(p));
  return out;
}

MultiIndex multi_index_from(const json& j) { return MultiIndex(j.get<std::vector<unsigned>>()); }

PowerSeries series_from(const json& j) {
  PowerSeries f(j.at("d").get<std::size_t>());
  for (const auto& t : j.at("terms")) {
    Complex c;
    if (t.contains("q"))
      c = to_double(rational_from(t["q"].get<std::string>()));
    else
      c = {t.value("re", 0.0), t.value("im", 0.0)};
    f.add_term(multi_index_from(t.at("alpha")), c);
  }
  return f;
}

bool has_exact_coefficients(const json& j) {
  const auto& terms = j.at("terms");
  return std::all_of(terms.begin(), terms.end(), [](const json& t) { return t.contains("q"); });
}

RationalSeries rational_series_from(const json& j) {
  RationalSeries f(j.at("d").get<std::size_t>());
  for (const auto& t : j.at("terms"))
    f.add_term(multi_index_from(t.at("alpha")), rational_from(t.at("q").get<std::string>()));
  return f;
}

NCSeries nc_series_from(const json& j) {
  const std::size_t d = j.at("d").get<std::size_t>();
  NCSeries f(d);
  for (const auto& t : j.at("terms")) {
    std::vector<unsigned> letters;
    for (unsigned letter : t.at("word").get<std::vector<unsigned>>()) {
      if (letter < 1 || letter > d) throw Error(ErrorCode::DimensionMismatch, "word letter out of range 1..d");
      letters.push_back(letter - 1);
    }
    f.add_term(Word(std::move(letters)), Complex(t.value("re", 0.0), t.value("im", 0.0)));
  }
  return f;
}

MatrixTuple tuple_from(const json& j) {
  std::vector<Matrix> ms;
  for (const auto& m : j.at("matrices")) ms.push_back(matrix_from(m));
  MatrixTuple t(std::move(ms));
  if (j.contains("d") && j["d"].get<std::size_t>() != t.dimension())
    throw Error(ErrorCode::DimensionMismatch, "tuple d disagrees with the number of matrices");
  if (j.contains("n") && j["n"].get<Eigen::Index>() != t.size())
    throw Error(ErrorCode::SizeMismatch, "tuple n disagrees with the matrix size");
  return t;
}

KernelCoefficients kernel_from(const json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "da" || s == "drury-arveson") return KernelCoefficients::drury_arveson();
    if (s == "szego") return KernelCoefficients::szego();
    if (s == "dirichlet") return KernelCoefficients::dirichlet();
    if (s == "modified-dirichlet") return KernelCoefficients::modified_dirichlet();
    throw Error(ErrorCode::InvalidArgument, "unknown kernel family '" + s + "'");
  }
  if (j.contains("hardy-sobolev")) return KernelCoefficients::hardy_sobolev(j["hardy-sobolev"].get<double>());
  if (j.contains("coeffs")) return KernelCoefficients::from_coeffs(j["coeffs"].get<std::vector<double>>());
  throw Error(ErrorCode::InvalidArgument, "kernel must be a family name, hardy-sobolev or coeffs");
}

PickProblem pick_problem_from(const json& j) {
  PickProblem p;
  p.dimension = j.at("d").get<std::size_t>();
  p.nodes = points_from(j.at("nodes"));
  for (const auto& t : j.at("targets")) {
    if (t.is_array() && !t.empty() && t[0].is_array() && t[0].size() > 0 && t[0][0].is_array())
      p.targets.push_back(matrix_from(t));
    else
      p.targets.push_back(Matrix::Constant(1, 1, complex_from(t)));
  }
  if (j.contains("kernel")) p.kernel = kernel_from(j["kernel"]);
  p.validate();
  return p;
}

Rational rational_from(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0) throw Error(ErrorCode::InvalidArgument, "not a rational: '" + s + "'");
  if (sgn(q.get_den()) == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

}  // namespace pickwick::io
