#include "pvalent/cli.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "pvalent/errors.hpp"
#include "pvalent/harness.hpp"
#include "pvalent/io.hpp"
#include "pvalent/neighborhood.hpp"

namespace pvalent::cli {

using nlohmann::json;

double parse_angle(std::string_view text) {
  std::string s(text);
  const auto first = s.find_first_not_of(" \t");
  const auto last = s.find_last_not_of(" \t");
  if (first == std::string::npos) throw ParseError("empty angle");
  s = s.substr(first, last - first + 1);

  const auto parse_number = [&](const std::string& num) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(num, &used);
    } catch (const std::exception&) {
      throw ParseError("malformed angle '" + std::string(text) + "'");
    }
    if (used != num.size() || !std::isfinite(v)) throw ParseError("malformed angle '" + std::string(text) + "'");
    return v;
  };

  double sign = 1.0;
  std::string body = s;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
    sign = body[0] == '-' ? -1.0 : 1.0;
    body = body.substr(1);
  }
  if (body.rfind("pi", 0) == 0) {
    const std::string rest = body.substr(2);
    if (rest.empty()) return sign * std::numbers::pi;
    if (rest[0] != '*') throw ParseError("malformed angle '" + std::string(text) + "'");
    return sign * std::numbers::pi * parse_number(rest.substr(1));
  }
  return parse_number(s);
}

namespace {

struct Io {
  std::ostream& out;
  std::ostream& err;
};

void write_document(const std::string& path, const json& doc) {
  if (path.empty()) return;
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InvalidArgument("cannot write " + path);
  f << doc.dump(2) << "\n";
}

void print_verdict(std::ostream& out, const std::string& label, const Verdict& v) {
  out << std::setprecision(17);
  out << label << ": " << to_string(v.outcome) << "\n"
      << "  lhs: " << v.lhs << "\n"
      << "  threshold: " << v.threshold << "\n"
      << "  margin: " << v.margin << "\n";
  if (!v.note.empty()) out << "  note: " << v.note << "\n";
}

json header(const char* kind) { return {{"schema", kReportSchema}, {"kind", kind}}; }

// ---- apply -----------------------------------------------------------------

struct ApplyArgs {
  std::string input;
  bool prime = false;
  std::string out;
};

int cmd_apply(const ApplyArgs& a, Io io) {
  const auto file = load_function_file(a.input);
  const auto s = a.prime ? apply_operator_prime_normalized(file.function, file.op)
                         : apply_operator(file.function, file.op);
  io.out << std::setprecision(17);
  io.out << "# " << (a.prime ? "operator derivative / z^(p-m-1)" : "operator") << ": exponent re im\n";
  io.out << s.lead_exp() << " " << s.lead_coeff().real() << " " << s.lead_coeff().imag() << "\n";
  for (const auto& t : s.tail()) io.out << t.exp << " " << t.coeff.real() << " " << t.coeff.imag() << "\n";

  auto doc = header("series");
  doc["prime"] = a.prime;
  doc["input"] = to_json(file);
  doc["series"] = to_json(s);
  write_document(a.out, doc);
  return kHolds;
}

// ---- check -----------------------------------------------------------------

struct CheckArgs {
  std::string f_file;
  std::string g_file;
  std::string criterion;
  std::string alpha = "0";
  std::string beta = "0";
  double delta = 0.0;
  std::optional<std::string> phi;
  int grid = kStandardTolerances.grid;
  std::string out;
};

int cmd_check(const CheckArgs& a, Io io) {
  const auto ff = load_function_file(a.f_file);
  const auto gf = load_function_file(a.g_file);
  if (!(ff.op == gf.op)) throw DomainError("f and g carry different operator parameters (m, lambda, Omega)");
  const NeighborhoodParams nb{parse_angle(a.alpha), parse_angle(a.beta), a.delta};
  const auto& f = ff.function;
  const auto& g = gf.function;
  const auto& op = ff.op;

  auto doc = header("verdict");
  doc["criterion"] = a.criterion;
  doc["params"] = to_json(nb);
  doc["params"]["grid"] = a.grid;
  doc["operator"] = {{"m", op.m}, {"lambda", op.lambda}, {"Omega", op.omega}};

  io.out << "criterion: " << a.criterion << "\n";
  int code = kFails;
  bool falsified = false;
  const auto single = [&](const Verdict& v) {
    print_verdict(io.out, "verdict", v);
    doc["verdict"] = to_json(v);
    falsified = v.outcome == Outcome::falsified;
    code = v.holds() ? kHolds : kFails;
  };
  // membership queries also surface the matching sufficient condition
  const auto membership = [&](const Verdict& member, const Verdict& suff) {
    single(member);
    print_verdict(io.out, "sufficient condition", suff);
    doc["sufficient"] = to_json(suff);
    const bool broken = suff.holds() && !member.holds();
    io.out << "implication sufficient => member: " << (broken ? "VIOLATED" : "consistent") << "\n";
    doc["implication_consistent"] = !broken;
    if (broken) {
      falsified = true;
      doc["verdict"]["outcome"] = to_string(Outcome::falsified);
    }
  };
  const auto alignment = [&] {
    if (!a.phi) throw InvalidArgument("--phi is required for " + a.criterion);
    doc["params"]["phi"] = parse_angle(*a.phi);
    return ArgAlignment{parse_angle(*a.phi), kStandardTolerances.alignment};
  };

  if (a.criterion == "suff-n") {
    single(sufficient_N(f, g, op, nb));
  } else if (a.criterion == "suff-m") {
    single(sufficient_M(f, g, op, nb));
  } else if (a.criterion == "member-n") {
    membership(membership_N(f, g, op, nb, a.grid), sufficient_N(f, g, op, nb));
  } else if (a.criterion == "member-m") {
    membership(membership_M(f, g, op, nb, a.grid), sufficient_M(f, g, op, nb));
  } else if (a.criterion == "nec-n") {
    single(necessary_N_bound(f, g, op, nb, alignment(), a.grid));
  } else if (a.criterion == "nec-m") {
    single(necessary_M_bound(f, g, op, nb, alignment(), a.grid));
  } else if (a.criterion == "thm211") {
    const auto r = derivative_bound_implication(f, g, op, nb, a.grid);
    print_verdict(io.out, "hypothesis", r.hypothesis);
    print_verdict(io.out, "conclusion", r.conclusion);
    doc["hypothesis"] = to_json(r.hypothesis);
    doc["conclusion"] = to_json(r.conclusion);
    falsified = r.conclusion.outcome == Outcome::falsified;
    code = r.hypothesis.holds() && r.conclusion.holds() ? kHolds : kFails;
  } else {
    throw InvalidArgument("unknown criterion " + a.criterion);
  }
  if (falsified) io.err << "FALSIFICATION: hypotheses hold numerically but the conclusion fails\n";
  write_document(a.out, doc);
  return code;
}

// ---- construct -------------------------------------------------------------

struct ConstructArgs {
  std::string g_file;
  double delta = 0.0;
  std::string alpha = "0";
  std::string beta = "0";
  int K = 0;
  std::string out;
};

int cmd_construct(const ConstructArgs& a, Io io) {
  const auto gf = load_function_file(a.g_file);
  const NeighborhoodParams nb{parse_angle(a.alpha), parse_angle(a.beta), a.delta};
  const auto f = construct_example_partner(gf.function, gf.op, nb, a.K);
  const FunctionFile file{f, gf.op};
  const auto text = to_json(file).dump(2) + "\n";
  if (a.out.empty()) {
    io.out << text;
  } else {
    std::ofstream o(a.out, std::ios::binary);
    if (!o) throw InvalidArgument("cannot write " + a.out);
    o << text;
    const int p = f.p();
    const int n = f.n();
    const double T = lower_bound_N(p, gf.op.m, nb);
    io.out << std::setprecision(17) << "wrote partner truncated at K = " << a.K << " to " << a.out << "\n"
           << "expected suff-n margin: " << (n + p - 1) * (nb.delta - T) / (a.K + p) << "\n";
  }
  return kHolds;
}

// ---- suite -----------------------------------------------------------------

struct SuiteArgs {
  std::string suite;
  std::int64_t trials = 100;
  std::uint64_t seed = 0;
  std::string out;
};

int cmd_suite(const SuiteArgs& a, Io io) {
  const auto report = run_property_suite(a.suite, a.trials, a.seed);
  io.out << report.summary();
  write_document(a.out, report.to_json());
  return report.failed == 0 ? kHolds : kFails;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Operators and neighborhood criteria for p-valent functions", "pvalent"};
  app.require_subcommand(1);

  ApplyArgs apply;
  auto* sub_apply = app.add_subcommand("apply", "Apply the operator to a function file");
  sub_apply->add_option("input", apply.input, "function file")->required();
  sub_apply->add_flag("--prime", apply.prime, "emit the normalized derivative instead");
  sub_apply->add_option("--out", apply.out, "machine-readable report path");

  CheckArgs check;
  auto* sub_check = app.add_subcommand("check", "Evaluate a criterion for f against g");
  sub_check->add_option("f", check.f_file, "function file for f")->required();
  sub_check->add_option("g", check.g_file, "function file for g")->required();
  sub_check->add_option("--criterion", check.criterion)
      ->required()
      ->check(CLI::IsMember({"suff-n", "suff-m", "member-n", "member-m", "nec-n", "nec-m", "thm211"}));
  sub_check->add_option("--alpha", check.alpha, "radians, or pi*x");
  sub_check->add_option("--beta", check.beta, "radians, or pi*x");
  sub_check->add_option("--delta", check.delta)->required();
  sub_check->add_option("--phi", check.phi, "alignment angle for nec-n / nec-m");
  sub_check->add_option("--grid", check.grid, "boundary samples");
  sub_check->add_option("--out", check.out, "machine-readable report path");

  ConstructArgs construct;
  auto* sub_construct = app.add_subcommand("construct", "Build the telescoping partner of g");
  sub_construct->add_option("g", construct.g_file, "function file for g")->required();
  sub_construct->add_option("--delta", construct.delta)->required();
  sub_construct->add_option("--alpha", construct.alpha, "radians, or pi*x");
  sub_construct->add_option("--beta", construct.beta, "radians, or pi*x");
  sub_construct->add_option("-K", construct.K, "truncation order")->required();
  sub_construct->add_option("--out", construct.out, "output function file (stdout if omitted)");

  SuiteArgs suite;
  auto* sub_suite = app.add_subcommand("suite", "Run a property suite");
  sub_suite->add_option("--suite", suite.suite)->required();
  sub_suite->add_option("--trials", suite.trials);
  sub_suite->add_option("--seed", suite.seed);
  sub_suite->add_option("--out", suite.out, "machine-readable report path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kHolds : kUsage;
  }

  const Io io{out, err};
  try {
    if (*sub_apply) return cmd_apply(apply, io);
    if (*sub_check) return cmd_check(check, io);
    if (*sub_construct) return cmd_construct(construct, io);
    if (*sub_suite) return cmd_suite(suite, io);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidArgument& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kDomain;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace pvalent::cli
