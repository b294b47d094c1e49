#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ckms/ckwords.hpp"
#include "ckms/classify.hpp"
#include "ckms/states.hpp"
#include "json.hpp"

namespace ckms::cli {

using Json = nlohmann::ordered_json;

/// Malformed command-line input; exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Well-formed input that fails a check or a precondition; exit code 1.
struct Rejection : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json parse_json(const std::string& text, const std::string& what);

/// "F<n>", {"n": n, "rows": [...]} or a bare array of rows.
ZeroOneMatrix parse_matrix(const std::string& text);

Scalar scalar_from_json(const Json& j);
/// A JSON scalar, or a bare rational literal such as 1/3.
Scalar parse_scalar(const std::string& text);
/// A JSON array of scalars, or a comma-separated list of rational literals.
std::vector<Scalar> parse_vector(const std::string& text);
std::vector<Rational> parse_rationals(const std::string& text);
std::vector<long> parse_longs(const std::string& text);

std::string fmt15(double v);
std::string fmt17(double v);

Json to_json(const Scalar& s);
Json to_json(const NormalForm& x);
Json to_json(const ZeroOneMatrix& A);
Json to_json(const Monomial& m);

Json describe(const Scalar& s);
Json describe(const Interval& iv);
Json describe(const Enclosure& e);
Json describe(const TypeLabel& label);

}  // namespace ckms::cli
