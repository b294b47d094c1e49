#include "io.hpp"

#include <cstdio>
#include <limits>
#include <sstream>

#include "ckms/errors.hpp"

namespace ckms::cli {

Json parse_json(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw UsageError("malformed JSON in " + what + ": " + e.what());
  }
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\r\n") - b + 1);
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(trim(item));
  return out;
}

Integer integer_from_json(const Json& j, const std::string& what) {
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_number_unsigned()) return Integer(j.get<unsigned long long>());
  if (j.is_string()) {
    const Rational r = parse_rational(j.get<std::string>());
    if (denominator(r) != 1) throw UsageError(what + " must be an integer");
    return numerator(r);
  }
  throw UsageError(what + " must be an integer or an integer string");
}

Rational rational_from_json(const Json& j, const std::string& what) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer() || j.is_number_unsigned()) return Rational(integer_from_json(j, what));
  throw UsageError(what + " must be a rational string such as \"1/3\" or an integer");
}

Json integer_json(const Integer& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return static_cast<long long>(v);
  return v.str();
}

}  // namespace

ZeroOneMatrix parse_matrix(const std::string& raw) {
  const std::string text = trim(raw);
  if (text.size() >= 2 && text[0] == 'F' && text.find_first_not_of("0123456789", 1) == std::string::npos) {
    if (text.size() > 6) throw UsageError("matrix shorthand dimension too large: " + text);
    return ZeroOneMatrix::full(std::stoul(text.substr(1)));
  }
  const Json j = parse_json(text, "--matrix");
  const Json* rows = &j;
  if (j.is_object()) {
    if (!j.contains("rows")) throw UsageError("matrix object needs a \"rows\" field");
    rows = &j.at("rows");
    if (j.contains("n") && j.at("n").get<std::size_t>() != rows->size())
      throw UsageError("matrix field n does not match the number of rows");
  }
  if (!rows->is_array()) throw UsageError("matrix must be F<n>, an array of rows or {\"n\":..,\"rows\":..}");
  return ZeroOneMatrix::from_rows(rows->get<std::vector<std::vector<int>>>());
}

Scalar scalar_from_json(const Json& j) {
  if (j.is_string() || j.is_number_integer() || j.is_number_unsigned()) return Scalar(rational_from_json(j, "scalar"));
  if (j.is_number_float())
    throw UsageError("bare JSON floats are not accepted as scalars; use a rational string or {\"type\":\"float\",...}");
  if (!j.is_object() || !j.contains("type")) throw UsageError("scalar must be an object with a \"type\" field");
  const std::string type = j.at("type").get<std::string>();
  if (type == "rational") {
    const Integer num = integer_from_json(j.at("num"), "num");
    const Integer den = j.contains("den") ? integer_from_json(j.at("den"), "den") : Integer(1);
    if (den == 0) throw UsageError("rational scalar with zero denominator");
    return Scalar(Rational(num, den));
  }
  if (type == "algebraic") {
    Poly poly;
    for (const auto& c : j.at("poly")) poly.push_back(integer_from_json(c, "polynomial coefficient"));
    const Json& iv = j.at("interval");
    if (!iv.is_array() || iv.size() != 2) throw UsageError("algebraic interval must be [lo, hi]");
    return Scalar(Algebraic(poly, rational_from_json(iv[0], "interval end"), rational_from_json(iv[1], "interval end")));
  }
  if (type == "float") {
    if (!j.at("value").is_number()) throw UsageError("float scalar value must be a JSON number");
    return Scalar::floating(j.at("value").get<double>());
  }
  if (type == "power") return Scalar::power(scalar_from_json(j.at("base")), j.at("exp").get<long>());
  if (type == "product") {
    std::vector<Scalar> factors;
    for (const auto& f : j.at("factors")) factors.push_back(scalar_from_json(f));
    return Scalar::product(std::move(factors));
  }
  throw UsageError("unknown scalar type '" + type + "'");
}

Scalar parse_scalar(const std::string& raw) {
  const std::string text = trim(raw);
  if (!text.empty() && (text[0] == '{' || text[0] == '"')) return scalar_from_json(parse_json(text, "scalar"));
  return Scalar(parse_rational(text));
}

std::vector<Scalar> parse_vector(const std::string& raw) {
  const std::string text = trim(raw);
  std::vector<Scalar> out;
  if (!text.empty() && text[0] == '[') {
    const Json j = parse_json(text, "vector");
    for (const auto& e : j) out.push_back(scalar_from_json(e));
  } else {
    for (const auto& item : split_commas(text)) out.emplace_back(parse_rational(item));
  }
  if (out.empty()) throw UsageError("empty vector");
  return out;
}

std::vector<Rational> parse_rationals(const std::string& raw) {
  const std::string text = trim(raw);
  std::vector<Rational> out;
  if (!text.empty() && text[0] == '[') {
    for (const auto& e : parse_json(text, "rational list")) out.push_back(rational_from_json(e, "entry"));
  } else {
    for (const auto& item : split_commas(text)) out.push_back(parse_rational(item));
  }
  if (out.empty()) throw UsageError("empty rational list");
  return out;
}

std::vector<long> parse_longs(const std::string& raw) {
  std::vector<long> out;
  for (const auto& r : parse_rationals(raw)) {
    if (denominator(r) != 1 || abs(r) > 1000000) throw UsageError("expected small integers, got " + to_string(r));
    out.push_back(static_cast<long>(numerator(r)));
  }
  return out;
}

std::string fmt15(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Json to_json(const Scalar& s) {
  const auto& v = s.value();
  if (const auto* r = std::get_if<Rational>(&v))
    return {{"type", "rational"}, {"num", integer_json(numerator(*r))}, {"den", integer_json(denominator(*r))}};
  if (const auto* a = std::get_if<Algebraic>(&v)) {
    Json poly = Json::array();
    for (const auto& c : a->poly()) poly.push_back(integer_json(c));
    return {{"type", "algebraic"}, {"poly", poly}, {"interval", {to_string(a->lo()), to_string(a->hi())}}};
  }
  if (const auto* d = std::get_if<double>(&v)) return {{"type", "float"}, {"value", *d}};
  if (const auto* p = std::get_if<PowerForm>(&v)) return {{"type", "power"}, {"base", to_json(*p->base)}, {"exp", p->exp}};
  Json factors = Json::array();
  for (const auto& f : std::get<ProductForm>(v).factors) factors.push_back(to_json(f));
  return {{"type", "product"}, {"factors", factors}};
}

Json to_json(const NormalForm& x) {
  Json out = Json::array();
  for (const auto& [m, c] : x.terms()) out.push_back({{"J", m.J}, {"K", m.K}, {"coeff", to_json(Scalar(c))}});
  return out;
}

Json to_json(const ZeroOneMatrix& A) { return {{"n", A.dim()}, {"rows", A.rows()}}; }

Json to_json(const Monomial& m) { return {{"J", m.J}, {"K", m.K}, {"text", to_string(m)}}; }

Json describe(const Scalar& s) {
  const Interval iv = enclose(s);
  return {{"value", to_string(s)},
          {"float", fmt15(s.approx())},
          {"enclosure", {fmt17(iv.lo), fmt17(iv.hi)}},
          {"exact", s.is_exact()},
          {"scalar", to_json(s)}};
}

Json describe(const Interval& iv) {
  return {{"float", fmt15(iv.mid())}, {"enclosure", {fmt17(iv.lo), fmt17(iv.hi)}}, {"width", iv.hi - iv.lo}};
}

Json describe(const Enclosure& e) {
  Json j = describe(e.value);
  j["float"] = fmt15(e.mid());
  j["exact"] = e.exact ? Json(to_string(*e.exact)) : Json(nullptr);
  return j;
}

Json describe(const TypeLabel& label) {
  const Interval iv = enclose(label.lambda);
  Json j{{"lambda", to_string(label.lambda)},
         {"lambda_float", fmt15(label.lambda.approx())},
         {"lambda_enclosure", {fmt17(iv.lo), fmt17(iv.hi)}},
         {"lambda_scalar", to_json(label.lambda)},
         {"decomposition", nullptr}};
  if (label.decomposition)
    j["decomposition"] = {{"base", to_string(label.decomposition->base)}, {"exponents", label.decomposition->exponents}};
  return j;
}

}  // namespace ckms::cli
