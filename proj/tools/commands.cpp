#include "commands.hpp"

#include <map>
#include <random>

#include "pickwick/daspace/daspace.hpp"
#include "pickwick/error.hpp"
#include "pickwick/interp/interp.hpp"
#include "pickwick/io/json.hpp"
#include "pickwick/multiplier/multiplier.hpp"
#include "pickwick/ncfock/ncfock.hpp"
#include "pickwick/optheory/dilation.hpp"
#include "pickwick/optheory/generators.hpp"
#include "pickwick/optheory/toeplitz.hpp"
#include "pickwick/pick/classify.hpp"
#include "pickwick/pick/leech.hpp"
#include "pickwick/pick/pick.hpp"
#include "pickwick/pick/psd.hpp"

namespace pickwick::cli {

extern const std::map<std::string, std::string> kEmbeddedSchemas;

namespace {

using io::to_json;

double tolerance_of(const json& p, double fallback) { return p.value("tolerance", fallback); }

KernelCoefficients kernel_of(const json& p) {
  return p.contains("kernel") ? io::kernel_from(p["kernel"]) : KernelCoefficients::drury_arveson();
}

std::vector<Vector> rows_of(const json& j) {
  std::vector<Vector> out;
  for (const auto& r : j) out.push_back(io::vector_from(r));
  return out;
}

std::vector<Complex> complexes_of(const json& j) {
  std::vector<Complex> out;
  for (const auto& c : j) out.push_back(io::complex_from(c));
  return out;
}

Outcome infeasible(json result) { return {std::move(result), kExitInfeasible}; }

MatrixTuple tuple_of(const json& p, std::optional<std::uint64_t> seed, json& result) {
  if (p.contains("tuple")) return io::tuple_from(p["tuple"]);
  if (!seed) throw Error(ErrorCode::InvalidArgument, "random tuples need an explicit seed");
  const json& r = p["random"];
  std::mt19937_64 rng(*seed);
  const auto family =
      r.value("family", "polynomial") == "diagonalizable" ? CommutingFamily::Diagonalizable : CommutingFamily::Polynomial;
  MatrixTuple t = random_commuting_tuple(rng, r["d"].get<std::size_t>(), r["n"].get<Eigen::Index>(),
                                         r["row_norm"].get<double>(), family);
  result["generated_tuple"] = to_json(t);
  return t;
}

Outcome cmd_norm(const json& p, std::optional<std::uint64_t>) {
  const std::string space = p.value("space", "da");
  json r{{"space", space}};
  if (space == "hardy-sobolev") {
    if (!p.contains("a")) throw Error(ErrorCode::InvalidArgument, "hardy-sobolev norm needs the parameter a");
    r["a"] = p["a"];
    r["norm_sq"] = ha_norm_sq(io::series_from(p["series"]), p["a"].get<double>());
    return {r};
  }
  const bool bergman = space == "bergman2";
  if (io::has_exact_coefficients(p["series"])) {
    const RationalSeries f = io::rational_series_from(p["series"]);
    const Rational q = bergman ? bergman2_norm_sq(f) : da_norm_sq(f);
    r["norm_sq_exact"] = to_string(q);
    r["norm_sq"] = to_double(q);
  } else {
    const PowerSeries f = io::series_from(p["series"]);
    r["norm_sq"] = bergman ? bergman2_norm_sq(f) : da_norm_sq(f);
  }
  return {r};
}

Outcome cmd_kernel(const json& p, std::optional<std::uint64_t>) {
  const KernelCoefficients k = kernel_of(p);
  const Point z = io::point_from(p["z"]);
  const Point w = p.contains("w") ? io::point_from(p["w"]) : z;
  json r{{"kernel", to_json(k)}, {"family", k.name()}, {"value", to_json(k(z, w))}};
  if (p.contains("points")) r["gram"] = to_json(k.gram(io::points_from(p["points"])));
  return {r};
}

Outcome cmd_mult(const json& p, std::optional<std::uint64_t>) {
  const PowerSeries f = io::series_from(p["series"]);
  const unsigned cutoff = p["cutoff"].get<unsigned>();
  json curve = json::array();
  for (unsigned k = 0; k <= cutoff; ++k) curve.push_back(mult_norm_lower(f, k));
  json r{{"lower_bound_curve", curve}, {"cutoff", cutoff}};
  if (p.contains("points")) {
    const KernelCoefficients k = kernel_of(p);
    const std::vector<Point> pts = io::points_from(p["points"]);
    std::vector<Complex> values;
    for (const auto& z : pts) values.push_back(eval_series(f, z));
    const PsdVerdict v = psd_check(mult_criterion_matrix(values, pts, k), tolerance_of(p, kDefaultPsdTolerance));
    r["criterion"] = {{"kernel", to_json(k)}, {"values", to_json(Vector(Eigen::Map<const Vector>(values.data(), values.size())))},
                      {"verdict", to_json(v)}};
    if (k.is_drury_arveson()) {
      json s = json::array();
      for (const auto& z : pts) s.push_back(to_json(sarason_function(f, z)));
      r["sarason"] = s;
    }
  }
  return {r};
}

Outcome cmd_pick_check(const json& p, std::optional<std::uint64_t>) {
  const PickProblem problem = io::pick_problem_from(p);
  const Matrix m = pick_matrix(problem);
  const PsdVerdict v = psd_check(m, tolerance_of(p, kDefaultPsdTolerance));
  json r{{"verdict", to_json(v)}, {"pick_matrix", to_json(m)}, {"kernel", to_json(problem.kernel)}};
  return v.is_psd ? Outcome{r} : infeasible(r);
}

Outcome cmd_pick_solve(const json& p, std::optional<std::uint64_t>) {
  const PickProblem problem = io::pick_problem_from(p);
  const double tol = tolerance_of(p, kDefaultPsdTolerance);
  const PsdVerdict v = psd_check(pick_matrix(problem), tol);
  if (!v.is_psd) return infeasible({{"verdict", to_json(v)}});
  json r = to_json(solve_pick(problem, tol));
  r["interpolation_tolerance"] = 1e-7;
  return {r};
}

Outcome cmd_classify(const json& p, std::optional<std::uint64_t>) {
  const KernelCoefficients k = io::kernel_from(p["kernel"]);
  const CompletePickVerdict v = classify_complete_pick(k, p["cutoff"].get<std::size_t>(), tolerance_of(p, 1e-12));
  json r = to_json(v);
  r["kernel"] = to_json(k);
  return v.pass ? Outcome{r} : infeasible(r);
}

Outcome cmd_embed(const json& p, std::optional<std::uint64_t>) {
  const Matrix k = p.contains("gram") ? io::matrix_from(p["gram"])
                                      : kernel_of(p).gram(io::points_from(p["points"]));
  const double tol = tolerance_of(p, kDefaultPsdTolerance);
  const std::size_t idx = p.value("normalization_index", std::size_t{0});
  try {
    return {to_json(am_embedding(k, idx, tol))};
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotCompletePick) throw;
    return infeasible({{"error", {{"code", to_string(e.code())}, {"message", e.what()}}}});
  }
}

Outcome cmd_leech(const json& p, std::optional<std::uint64_t>) {
  const auto nodes = io::points_from(p["nodes"]);
  const auto phi = rows_of(p["phi"]);
  const auto theta = complexes_of(p["theta"]);
  const double tol = tolerance_of(p, kDefaultPsdTolerance);
  const PsdVerdict v = psd_check(leech_matrix(nodes, phi, theta), tol);
  if (!v.is_psd) return infeasible({{"verdict", to_json(v)}});
  return {to_json(leech_solve(nodes, phi, theta, tol))};
}

Outcome cmd_corona(const json& p, std::optional<std::uint64_t>) {
  const auto nodes = io::points_from(p["nodes"]);
  const auto phi = rows_of(p["phi"]);
  const double delta = p["delta"].get<double>();
  const double tol = tolerance_of(p, kDefaultPsdTolerance);
  const PsdVerdict v =
      psd_check(leech_matrix(nodes, phi, std::vector<Complex>(nodes.size(), Complex(delta))), tol);
  if (!v.is_psd) return infeasible({{"verdict", to_json(v)}});
  return {to_json(corona_solve(nodes, phi, delta, tol))};
}

Outcome cmd_dilate(const json& p, std::optional<std::uint64_t> seed) {
  json r;
  const MatrixTuple t = tuple_of(p, seed, r);
  const DilationReport rep = dilation_report(t, p["cutoff"].get<unsigned>());
  r.update(to_json(rep));
  r["telescoping_bound_holds"] = rep.isometry_defect <= rep.purity_tail + 1e-9;
  return {r};
}

Outcome cmd_vn(const json& p, std::optional<std::uint64_t> seed) {
  json r;
  const MatrixTuple t = tuple_of(p, seed, r);
  const VnReport rep = vn_report(t, io::series_from(p["series"]), p["cutoff"].get<unsigned>());
  r.update(to_json(rep));
  return rep.verdict == VnVerdict::Violation ? infeasible(r) : Outcome{r};
}

Outcome cmd_toeplitz(const json& p, std::optional<std::uint64_t>) {
  const auto d = p["d"].get<std::size_t>();
  const auto i = p["i"].get<std::size_t>();
  const auto j = p["j"].get<std::size_t>();
  const auto cutoff = p["cutoff"].get<unsigned>();
  if (i > d || j > d) throw Error(ErrorCode::InvalidArgument, "coordinate index exceeds d");
  const std::string basis = p.value("basis", "monomial");
  json r{{"basis", basis}};
  if (basis == "orthonormal") {
    r["matrix"] = to_json(toeplitz_commutator_orthonormal(d, i - 1, j - 1, cutoff));
    return {r};
  }
  const ExactMatrix c = toeplitz_commutator(d, i - 1, j - 1, cutoff);
  r["matrix"] = to_json(c);
  const MonomialBasis b(d, cutoff);
  json labels = json::array();
  for (const auto& alpha : b.monomials()) labels.push_back(to_json(alpha));
  r["monomials"] = labels;
  if (i == j) {
    bool ok = c.is_diagonal();
    for (std::size_t k = 0; k < b.size() && ok; ++k) ok = c.at(k, k) == commutator_diagonal_closed_form(b[k], i - 1);
    r["matches_closed_form"] = ok;
  }
  return {r};
}

Outcome cmd_ess_normal(const json& p, std::optional<std::uint64_t>) {
  std::vector<MultiIndex> gens;
  for (const auto& g : p["generators"]) gens.push_back(io::multi_index_from(g));
  return {to_json(essential_normality_probe(gens, p["cutoff"].get<unsigned>(), p["p"].get<double>()))};
}

Outcome cmd_fock(const json& p, std::optional<std::uint64_t>) {
  const std::string op = p["op"].get<std::string>();
  json r{{"op", op}};
  auto need = [&](const char* key) -> const json& {
    if (!p.contains(key)) throw Error(ErrorCode::InvalidArgument, "fock " + op + " needs '" + key + "'");
    return p[key];
  };
  if (op == "symmetrize") {
    const json& s = need("series");
    if (io::has_exact_coefficients(s)) {
      const RationalNCSeries g = symmetrize(io::rational_series_from(s));
      NCSeries approx(g.dimension());
      for (const auto& [w, c] : g) approx.add_term(w, Complex(to_double(c), 0.0));
      r["nc_series"] = to_json(approx);
      r["nc_norm_sq_exact"] = to_string(nc_norm_sq(g));
      r["da_norm_sq_exact"] = to_string(da_norm_sq(io::rational_series_from(s)));
    } else {
      const NCSeries g = symmetrize(io::series_from(s));
      r["nc_series"] = to_json(g);
      r["nc_norm_sq"] = nc_norm_sq(g);
      r["da_norm_sq"] = da_norm_sq(io::series_from(s));
    }
  } else if (op == "restrict") {
    const NCSeries g = io::nc_series_from(need("nc_series"));
    const PowerSeries f = restrict_to_ball(g);
    r["series"] = to_json(f);
    r["da_norm_sq"] = da_norm_sq(f);
    r["nc_norm_sq"] = nc_norm_sq(g);
  } else if (op == "eval") {
    const NCSeries g = io::nc_series_from(need("nc_series"));
    const MatrixTuple x = io::tuple_from(need("tuple"));
    const Matrix v = nc_eval(g, x);
    const double lhs = std::pow(linalg::spectral_norm(v), 2);
    const double bound = nc_eval_bound_sq(g, x);
    r["value"] = to_json(v);
    r["norm_sq"] = lhs;
    r["row_norm"] = x.row_norm();
    r["bound_sq"] = std::isfinite(bound) ? json(bound) : json(nullptr);
    r["bound_holds"] = !std::isfinite(bound) || lhs <= bound * (1.0 + 1e-12) + 1e-12;
  } else {
    const NCSeries g = io::nc_series_from(need("nc_series"));
    r["nc_norm_sq"] = nc_norm_sq(g);
    r["symmetric"] = is_symmetric(g, 1e-12);
  }
  return {r};
}

Outcome cmd_interp(const json& p, std::optional<std::uint64_t>) {
  const KernelCoefficients k = kernel_of(p);
  const std::vector<Point> pts = io::points_from(p["points"]);
  SequenceThresholds th;
  if (p.contains("thresholds")) {
    const json& t = p["thresholds"];
    th.ws_epsilon = t.value("ws_epsilon", th.ws_epsilon);
    th.carleson = t.value("carleson", th.carleson);
    th.riesz_lower = t.value("riesz_lower", th.riesz_lower);
  }
  const Matrix g = gram_normalized(pts, k);
  json r = to_json(sequence_report(g, th));
  r["kernel"] = to_json(k);
  if (p.contains("eta")) r["subsequence"] = to_json(extract_subsequence(g, p["eta"].get<double>()));
  return {r};
}

using Handler = Outcome (*)(const json&, std::optional<std::uint64_t>);

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table{
      {"norm", cmd_norm},         {"kernel", cmd_kernel},         {"mult", cmd_mult},
      {"pick-solve", cmd_pick_solve}, {"pick-check", cmd_pick_check}, {"classify-kernel", cmd_classify},
      {"embed", cmd_embed},       {"leech", cmd_leech},           {"corona", cmd_corona},
      {"dilate", cmd_dilate},     {"vn", cmd_vn},                 {"toeplitz", cmd_toeplitz},
      {"ess-normal", cmd_ess_normal}, {"fock", cmd_fock},         {"interp", cmd_interp}};
  return table;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"norm",   "kernel", "mult",      "pick-solve", "pick-check",
                                              "classify-kernel", "embed", "leech", "corona", "dilate",
                                              "vn",     "toeplitz", "ess-normal", "fock", "interp"};
  return names;
}

const json& schema_for(const std::string& name) {
  static std::map<std::string, json> parsed;
  auto it = parsed.find(name);
  if (it != parsed.end()) return it->second;
  auto src = kEmbeddedSchemas.find(name);
  if (src == kEmbeddedSchemas.end()) throw Error(ErrorCode::InvalidArgument, "no schema for '" + name + "'");
  return parsed.emplace(name, json::parse(src->second)).first->second;
}

Outcome dispatch(const std::string& command, const json& payload, std::optional<std::uint64_t> seed) {
  auto it = handlers().find(command);
  if (it == handlers().end()) throw Error(ErrorCode::InvalidArgument, "unknown command '" + command + "'");
  return it->second(payload, seed);
}

}  // namespace pickwick::cli
