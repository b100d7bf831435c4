#ifndef PVALENT_IO_HPP
#define PVALENT_IO_HPP

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "pvalent/neighborhood.hpp"
#include "pvalent/series.hpp"

namespace pvalent {

/// Version tag carried by every machine-readable document.
inline constexpr const char* kReportSchema = "pvalent.report/1";

/// A function together with the operator parameters stored alongside it.
struct FunctionFile {
  MultivalentFunction function;
  OperatorParams op;
};

/// Parses a function document:
///   {"p": 2, "n": 1, "m": 0, "lambda": 0.5, "Omega": 1,
///    "coefficients": [[re, im], ...]}
/// m, lambda and Omega default to 0. Throws ParseError carrying a byte
/// offset for syntax errors or a JSON pointer for semantic ones.
FunctionFile parse_function_file(std::string_view text);
FunctionFile load_function_file(const std::string& path);

nlohmann::json to_json(const FunctionFile& file);
nlohmann::json to_json(const MultivalentFunction& f, const OperatorParams& op);
nlohmann::json to_json(const TruncatedSeries& s);
nlohmann::json to_json(const Verdict& v);
nlohmann::json to_json(const NeighborhoodParams& nb);
nlohmann::json complex_to_json(Complex c);

}  // namespace pvalent

#endif
