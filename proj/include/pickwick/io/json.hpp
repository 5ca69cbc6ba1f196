#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "pickwick/core/linalg.hpp"
#include "pickwick/daspace/point.hpp"
#include "pickwick/daspace/power_series.hpp"
#include "pickwick/interp/interp.hpp"
#include "pickwick/kernel.hpp"
#include "pickwick/ncfock/ncfock.hpp"
#include "pickwick/optheory/dilation.hpp"
#include "pickwick/optheory/matrix_tuple.hpp"
#include "pickwick/optheory/toeplitz.hpp"
#include "pickwick/pick/classify.hpp"
#include "pickwick/pick/leech.hpp"
#include "pickwick/pick/pick.hpp"

namespace pickwick::io {

using json = nlohmann::json;

// Complex numbers are [re, im]; vectors and points are arrays of those;
// matrices are arrays of rows.
json to_json(Complex c);
json to_json(const Vector& v);
json to_json(const Matrix& m);
json to_json(const Point& z);
json to_json(const MultiIndex& alpha);
json to_json(const PowerSeries& f);
json to_json(const RationalSeries& f);
json to_json(const NCSeries& f);
json to_json(const MatrixTuple& t);
json to_json(const KernelCoefficients& k);
json to_json(const PsdVerdict& v);
json to_json(const Realization& r);
json to_json(const PickSolution& s);
json to_json(const CompletePickVerdict& v);
json to_json(const Embedding& e);
json to_json(const LeechSolution& s);
json to_json(const CoronaSolution& s);
json to_json(const DilationReport& r);
json to_json(const VnReport& r);
json to_json(const ExactMatrix& m);
json to_json(const EssentialNormalityReport& r);
json to_json(const SequenceReport& r);
json to_json(const Subsequence& s);

Complex complex_from(const json& j);
Vector vector_from(const json& j);
Matrix matrix_from(const json& j);
Point point_from(const json& j);
std::vector<Point> points_from(const json& j);
MultiIndex multi_index_from(const json& j);
PowerSeries series_from(const json& j);
/// Exact series; every term needs a "q" rational string.
RationalSeries rational_series_from(const json& j);
bool has_exact_coefficients(const json& j);
/// Words are 1-based in JSON.
NCSeries nc_series_from(const json& j);
MatrixTuple tuple_from(const json& j);
/// "da" | "szego" | "dirichlet" | "modified-dirichlet" |
/// {"hardy-sobolev": a} | {"coeffs": [a_0, a_1, ...]}.
KernelCoefficients kernel_from(const json& j);
PickProblem pick_problem_from(const json& j);

/// Parses "p/q" or an integer string.
Rational rational_from(const std::string& s);

}  // namespace pickwick::io
