#include "pvalent/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "pvalent/errors.hpp"

namespace pvalent {

using nlohmann::json;

namespace {

[[noreturn]] void fail_at(const std::string& pointer, const std::string& what) {
  throw ParseError("at " + pointer + ": " + what);
}

int read_int(const json& doc, const char* key, bool required, int fallback) {
  const std::string ptr = std::string("/") + key;
  if (!doc.contains(key)) {
    if (required) fail_at(ptr, "missing required key");
    return fallback;
  }
  const auto& v = doc.at(key);
  if (!v.is_number_integer()) fail_at(ptr, "expected an integer");
  const auto x = v.get<long long>();
  if (x < -1'000'000 || x > 1'000'000) fail_at(ptr, "integer out of range");
  return static_cast<int>(x);
}

double read_real(const json& v, const std::string& ptr) {
  if (!v.is_number()) fail_at(ptr, "expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) fail_at(ptr, "expected a finite number");
  return x;
}

}  // namespace

FunctionFile parse_function_file(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError("syntax error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  if (!doc.is_object()) fail_at("/", "expected an object");

  const int p = read_int(doc, "p", true, 0);
  const int n = read_int(doc, "n", true, 0);
  if (p < 1) fail_at("/p", "valence must be >= 1");
  if (n < 1) fail_at("/n", "first index must be >= 1");

  OperatorParams op;
  op.m = read_int(doc, "m", false, 0);
  op.omega = read_int(doc, "Omega", false, 0);
  if (op.m < 0) fail_at("/m", "must be >= 0");
  if (op.omega < 0) fail_at("/Omega", "must be >= 0");
  if (doc.contains("lambda")) op.lambda = read_real(doc.at("lambda"), "/lambda");

  if (!doc.contains("coefficients")) fail_at("/coefficients", "missing required key");
  const auto& arr = doc.at("coefficients");
  if (!arr.is_array()) fail_at("/coefficients", "expected an array of [re, im] pairs");
  std::vector<Complex> coeffs;
  coeffs.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string ptr = "/coefficients/" + std::to_string(i);
    const auto& pair = arr[i];
    if (!pair.is_array() || pair.size() != 2) fail_at(ptr, "expected a [re, im] pair");
    coeffs.emplace_back(read_real(pair[0], ptr + "/0"), read_real(pair[1], ptr + "/1"));
  }
  return {MultivalentFunction(p, n, std::move(coeffs)), op};
}

FunctionFile load_function_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_function_file(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

json complex_to_json(Complex c) { return json::array({c.real(), c.imag()}); }

json to_json(const MultivalentFunction& f, const OperatorParams& op) {
  json coeffs = json::array();
  for (const auto& c : f.coeffs()) coeffs.push_back(complex_to_json(c));
  return {{"p", f.p()},          {"n", f.n()},           {"m", op.m},
          {"lambda", op.lambda}, {"Omega", op.omega},    {"coefficients", std::move(coeffs)}};
}

json to_json(const FunctionFile& file) { return to_json(file.function, file.op); }

json to_json(const TruncatedSeries& s) {
  json terms = json::array();
  terms.push_back({{"exp", s.lead_exp()}, {"coeff", complex_to_json(s.lead_coeff())}});
  for (const auto& t : s.tail()) terms.push_back({{"exp", t.exp}, {"coeff", complex_to_json(t.coeff)}});
  return {{"lead_exp", s.lead_exp()}, {"terms", std::move(terms)}};
}

json to_json(const Verdict& v) {
  json out = {{"outcome", to_string(v.outcome)},
              {"holds", v.holds()},
              {"lhs", v.lhs},
              {"threshold", v.threshold},
              {"margin", v.margin},
              {"between_m_bounds", v.between_m_bounds}};
  if (!v.note.empty()) out["note"] = v.note;
  return out;
}

json to_json(const NeighborhoodParams& nb) {
  return {{"alpha", nb.alpha}, {"beta", nb.beta}, {"delta", nb.delta}};
}

}  // namespace pvalent
