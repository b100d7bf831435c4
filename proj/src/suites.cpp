// Property suites backing the invariants of the series, criteria and harness
// layers. Every trial draws its own generator from trial_seed(seed, index),
// so a report is a pure function of (suite, trials, seed).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

#include "pvalent/boundary.hpp"
#include "pvalent/errors.hpp"
#include "pvalent/harness.hpp"
#include "pvalent/io.hpp"

namespace pvalent {

using nlohmann::json;
using std::numbers::pi;

namespace {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;
using TrialResult = std::optional<json>;
using Trial = std::function<TrialResult(std::mt19937_64&)>;

constexpr Tolerances kTol = kStandardTolerances;

bool close(Complex a, Complex b) {
  const double gap = std::abs(a - b);
  return gap <= kTol.coeff_abs || gap <= kTol.coeff_rel * std::max(std::abs(a), std::abs(b));
}

bool close_rel(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::max({1.0, std::abs(a), std::abs(b)});
}

using ExpMap = std::map<int, Complex>;

ExpMap terms_of(const TruncatedSeries& s) {
  ExpMap out{{s.lead_exp(), s.lead_coeff()}};
  for (const auto& t : s.tail()) out[t.exp] += t.coeff;
  return out;
}

bool same_terms(const ExpMap& a, const ExpMap& b) {
  ExpMap keys = a;
  for (const auto& [e, c] : b) keys[e];
  for (const auto& [e, unused] : keys) {
    const auto ia = a.find(e);
    const auto ib = b.find(e);
    const Complex ca = ia == a.end() ? Complex{} : ia->second;
    const Complex cb = ib == b.end() ? Complex{} : ib->second;
    if (!close(ca, cb)) return false;
  }
  return true;
}

json spec_json(const InstanceSpec& s) {
  return {{"p", s.p},         {"n", s.n}, {"m", s.m},         {"Omega", s.omega},
          {"lambda", s.lambda}, {"K", s.K}, {"coeff_magnitude", s.coeff_magnitude},
          {"seed", s.seed}};
}

json counterexample(const InstanceSpec& spec, const MultivalentFunction& f,
                    const MultivalentFunction& g, const NeighborhoodParams& nb,
                    const std::string& detail) {
  return {{"spec", spec_json(spec)},
          {"f", to_json(f, spec.op())},
          {"g", to_json(g, spec.op())},
          {"nb", to_json(nb)},
          {"detail", detail}};
}

json counterexample(const InstanceSpec& spec, const MultivalentFunction& f, const std::string& detail) {
  return {{"spec", spec_json(spec)}, {"f", to_json(f, spec.op())}, {"detail", detail}};
}

MultivalentFunction raw_function(const InstanceSpec& spec, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 0.5 * spec.coeff_magnitude);
  std::vector<Complex> c(static_cast<std::size_t>(spec.K - spec.n + 1));
  for (auto& x : c) x = {normal(rng), normal(rng)};
  return {spec.p, spec.n, std::move(c)};
}

// ---- oracles ---------------------------------------------------------------

// Exact (k+p)!/(k+p-m)! ((k+p-m)/(p-m))^Omega (1 + lambda k/(p-m)).
Rational exact_operator_weight(int k, int p, int m, int omega, const Rational& lambda) {
  BigInt falling = 1;
  for (int i = 0; i < m; ++i) falling *= k + p - i;
  Rational w = falling;
  for (int i = 0; i < omega; ++i) w *= Rational(k + p - m, p - m);
  return w * (1 + lambda * Rational(k, p - m));
}

// z s'(z), term by term.
ExpMap z_times_derivative(const ExpMap& s) {
  ExpMap out;
  for (const auto& [e, c] : s) out[e] = static_cast<double>(e) * c;
  return out;
}

// 1/((k+p-1)(k+p)) summed from n to K with exact rationals.
Rational telescoping_partial_sum(int n, int p, int K) {
  Rational sum = 0;
  for (int k = n; k <= K; ++k) sum += Rational(1, (k + p - 1) * (k + p));
  return sum;
}

// ---- series invariants -----------------------------------------------------

TrialResult salagean_first_order(std::mt19937_64& rng) {
  const auto spec = random_spec(rng);
  const auto f = raw_function(spec, rng);
  const auto s = derivative_m(f, spec.m);
  ExpMap oracle = z_times_derivative(terms_of(s));
  for (auto& [e, c] : oracle) c /= static_cast<double>(spec.p - spec.m);
  if (same_terms(terms_of(salagean(s, 1, spec.p, spec.m)), oracle)) return std::nullopt;
  return counterexample(spec, f, "D^1 differs from z s'/(p-m)");
}

TrialResult salagean_semigroup(std::mt19937_64& rng) {
  const auto spec = random_spec(rng);
  const auto f = raw_function(spec, rng);
  std::uniform_int_distribution<int> pick(0, 6);
  const int o1 = pick(rng);
  const int o2 = pick(rng);
  const auto s = derivative_m(f, spec.m);
  const auto once = salagean(s, o1 + o2, spec.p, spec.m);
  const auto twice = salagean(salagean(s, o1, spec.p, spec.m), o2, spec.p, spec.m);
  if (same_terms(terms_of(once), terms_of(twice))) return std::nullopt;
  return counterexample(spec, f,
                        "D^(" + std::to_string(o1) + "+" + std::to_string(o2) + ") is not compositional");
}

TrialResult operator_linearity(std::mt19937_64& rng) {
  const auto spec = random_spec(rng);
  const auto f1 = raw_function(spec, rng);
  const auto f2 = raw_function(spec, rng);
  const Complex scale{std::normal_distribution<double>()(rng), std::normal_distribution<double>()(rng)};
  std::vector<Complex> sum(f1.coeffs().size()), scaled(f1.coeffs().size());
  for (std::size_t i = 0; i < sum.size(); ++i) {
    sum[i] = f1.coeffs()[i] + f2.coeffs()[i];
    scaled[i] = scale * f1.coeffs()[i];
  }
  const auto op = spec.op();
  const auto F1 = apply_operator(f1, op);
  const auto F2 = apply_operator(f2, op);
  const auto Fsum = apply_operator({spec.p, spec.n, sum}, op);
  const auto Fscaled = apply_operator({spec.p, spec.n, scaled}, op);
  bool ok = close(Fsum.lead_coeff(), F1.lead_coeff()) && close(Fscaled.lead_coeff(), F1.lead_coeff());
  for (std::size_t i = 0; ok && i < sum.size(); ++i) {
    ok = close(Fsum.tail()[i].coeff, F1.tail()[i].coeff + F2.tail()[i].coeff) &&
         close(Fscaled.tail()[i].coeff, scale * F1.tail()[i].coeff);
  }
  if (ok) return std::nullopt;
  return counterexample(spec, f1, "operator is not linear in the tail");
}

TrialResult operator_combination(std::mt19937_64& rng) {
  const auto spec = random_spec(rng);
  const auto f = raw_function(spec, rng);
  const auto d = terms_of(salagean(derivative_m(f, spec.m), spec.omega, spec.p, spec.m));
  const auto zd = z_times_derivative(d);
  ExpMap oracle;
  for (const auto& [e, c] : d)
    oracle[e] = (1.0 - spec.lambda) * c + spec.lambda / (spec.p - spec.m) * zd.at(e);
  if (same_terms(terms_of(apply_operator(f, spec.op())), oracle)) return std::nullopt;
  return counterexample(spec, f, "operator differs from (1-lambda) D + lambda z D'/(p-m)");
}

TrialResult prime_is_derivative(std::mt19937_64& rng) {
  const auto spec = random_spec(rng);
  const auto f = raw_function(spec, rng);
  const auto F = apply_operator(f, spec.op());
  // F'(z) / z^(p-m-1): exponent e maps to e - (p-m) with factor e
  ExpMap oracle;
  for (const auto& [e, c] : terms_of(F)) oracle[e - (spec.p - spec.m)] = static_cast<double>(e) * c;
  if (same_terms(terms_of(apply_operator_prime_normalized(f, spec.op())), oracle)) return std::nullopt;
  return counterexample(spec, f, "normalized derivative differs from differentiated operator");
}

TrialResult weight_exactness(std::mt19937_64& rng) {
  const int p = std::uniform_int_distribution<int>(1, 8)(rng);
  const int m = std::uniform_int_distribution<int>(0, p - 1)(rng);
  const int omega = std::uniform_int_distribution<int>(0, 6)(rng);
  const int k = std::uniform_int_distribution<int>(1, 64)(rng);
  const int eighths = std::uniform_int_distribution<int>(0, 8)(rng);
  const OperatorParams op{eighths / 8.0, m, omega};
  const Rational exact_m = exact_operator_weight(k, p, m, omega, Rational(eighths, 8));
  const Rational exact_n = exact_m * (k + p - m);
  const double wm = operator_weight(k, p, op);
  const double wn = derivative_weight(k, p, op);
  const auto rel = [](double approx, const Rational& exact) {
    return std::abs(approx - static_cast<double>(exact)) / static_cast<double>(exact);
  };
  if (std::isfinite(wm) && wm > 0 && std::isfinite(wn) && wn > 0 && rel(wm, exact_m) <= 1e-12 &&
      rel(wn, exact_n) <= 1e-12)
    return std::nullopt;
  return json{{"k", k}, {"p", p}, {"m", m}, {"Omega", omega}, {"lambda", op.lambda},
              {"operator_weight", wm}, {"exact", static_cast<double>(exact_m)},
              {"detail", "factorial-ratio weight inaccurate"}};
}

// ---- criteria invariants ---------------------------------------------------

bool same_verdict(const Verdict& a, const Verdict& b, double rel) {
  const double scale = std::max({1.0, std::abs(a.lhs), std::abs(a.threshold)});
  return a.outcome == b.outcome && close_rel(a.lhs, b.lhs, rel) &&
         close_rel(a.threshold, b.threshold, rel) && std::abs(a.margin - b.margin) <= rel * scale;
}

TrialResult rotation_invariance(std::mt19937_64& rng) {
  auto spec = random_spec(rng);
  const auto [f, g, nb] = generate_pair(spec, Target::inside_sufficient_N);
  const auto op = spec.op();
  const auto verdicts = [&](const NeighborhoodParams& q) {
    const auto imp = derivative_bound_implication(f, g, op, q);
    return std::vector<Verdict>{sufficient_N(f, g, op, q), sufficient_M(f, g, op, q),
                                membership_N(f, g, op, q), membership_M(f, g, op, q),
                                imp.hypothesis, imp.conclusion};
  };
  const auto base = verdicts(nb);
  std::uniform_real_distribution<double> shift(-pi, pi);
  for (int i = 0; i < 10; ++i) {
    const double t = shift(rng);
    const auto rotated = verdicts({nb.alpha + t, nb.beta + t, nb.delta});
    for (std::size_t j = 0; j < base.size(); ++j)
      if (!same_verdict(base[j], rotated[j], 1e-12))
        return counterexample(spec, f, g, nb,
                              "verdict " + std::to_string(j) + " changed under rotation t = " + std::to_string(t));
  }
  return std::nullopt;
}

TrialResult sufficient_implies_membership(std::mt19937_64& rng, bool n_side) {
  const auto spec = random_spec(rng);
  const auto [f, g, nb] =
      generate_pair(spec, n_side ? Target::inside_sufficient_N : Target::inside_sufficient_M);
  const auto op = spec.op();
  const auto suff = n_side ? sufficient_N(f, g, op, nb) : sufficient_M(f, g, op, nb);
  const auto member = n_side ? membership_N(f, g, op, nb) : membership_M(f, g, op, nb);
  if (suff.holds() && member.holds()) return std::nullopt;
  return counterexample(spec, f, g, nb,
                        "sufficient " + std::string(to_string(suff.outcome)) + " (lhs " +
                            std::to_string(suff.lhs) + "), membership sup " + std::to_string(member.lhs));
}

TrialResult modulus_equality(std::mt19937_64& rng, bool n_side) {
  const auto spec = random_spec(rng);
  std::uniform_real_distribution<double> angle(-pi, pi);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> normal(0.0, 0.5);
  NeighborhoodParams nb;
  nb.alpha = angle(rng);
  nb.beta = nb.alpha + angle(rng);
  nb.delta = lower_bound_N(spec.p, spec.m, nb) + 0.01 + 4.0 * unit(rng);
  const auto len = static_cast<std::size_t>(spec.K - spec.n + 1);
  std::vector<Complex> a(len), b(len);
  for (std::size_t i = 0; i < len; ++i) {
    b[i] = {normal(rng), normal(rng)};
    a[i] = std::polar(std::abs(normal(rng)), std::arg(b[i]) + nb.beta - nb.alpha);
    if (unit(rng) < 0.1) b[i] = 0.0;
    if (unit(rng) < 0.1) a[i] = 0.0;
  }
  const MultivalentFunction f(spec.p, spec.n, a), g(spec.p, spec.n, b);
  const auto op = spec.op();
  const auto plain = n_side ? sufficient_N(f, g, op, nb) : sufficient_M(f, g, op, nb);
  const auto modulus = n_side ? sufficient_N_modulus(f, g, op, nb) : sufficient_M_modulus(f, g, op, nb);
  if (close_rel(plain.lhs, modulus.lhs, 1e-10) && plain.outcome == modulus.outcome) return std::nullopt;
  return counterexample(spec, f, g, nb,
                        "modulus lhs " + std::to_string(modulus.lhs) + " vs " + std::to_string(plain.lhs));
}

TrialResult telescoping_closed_form(std::mt19937_64& rng) {
  const int n = std::uniform_int_distribution<int>(1, 4)(rng);
  const int p = std::uniform_int_distribution<int>(1, 4)(rng);
  const int K = n + std::uniform_int_distribution<int>(0, 200)(rng);
  const Rational limit(1, n + p - 1);
  Rational prev = 0;
  for (int k = n; k <= K; ++k) {
    const Rational partial = telescoping_partial_sum(n, p, k);
    if (partial != limit - Rational(1, k + p) || !(partial > prev) || !(partial < limit))
      return json{{"n", n}, {"p", p}, {"K", k}, {"detail", "telescoping partial sum mismatch"}};
    prev = partial;
  }
  return std::nullopt;
}

TrialResult monotonicity(std::mt19937_64& rng) {
  const auto spec = random_spec(rng);
  const auto [f, g, nb] = generate_pair(spec, Target::unconstrained);
  std::vector<Complex> longer(f.coeffs().begin(), f.coeffs().end());
  std::normal_distribution<double> normal(0.0, 0.5);
  Complex extra{normal(rng), normal(rng)};
  if (extra == Complex{}) extra = 1.0;
  longer.push_back(extra);
  const MultivalentFunction f2(spec.p, spec.n, longer);
  const auto g2 = g.with_order(f2.order());
  const auto op = spec.op();
  const bool ok = sufficient_N(f2, g2, op, nb).lhs >= sufficient_N(f, g, op, nb).lhs &&
                  sufficient_M(f2, g2, op, nb).lhs >= sufficient_M(f, g, op, nb).lhs;
  if (ok) return std::nullopt;
  return counterexample(spec, f2, g2, nb, "adding a nonzero difference decreased a sum-type lhs");
}

TrialResult weight_specialization(std::mt19937_64& rng) {
  const int p = std::uniform_int_distribution<int>(1, 8)(rng);
  const OperatorParams plain{0.0, 0, 0};
  for (int k = 1; k <= 32; ++k) {
    if (derivative_weight(k, p, plain) != static_cast<double>(k + p) || operator_weight(k, p, plain) != 1.0)
      return json{{"p", p}, {"k", k}, {"detail", "weight does not reduce to k + p"}};
  }
  return std::nullopt;
}

// Forces the derivative-side hypothesis by scaling the twisted differences
// below the largest admissible scale (sup is convex in the scale).
TrialResult derivative_bound(std::mt19937_64& rng, bool force_m_zero) {
  auto spec = random_spec(rng);
  if (force_m_zero) spec.m = 0;
  std::uniform_real_distribution<double> angle(-pi, pi);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const auto op = spec.op();
  NeighborhoodParams nb;
  nb.alpha = angle(rng);
  nb.beta = nb.alpha + angle(rng);
  const double tn = lower_bound_N(spec.p, spec.m, nb);
  const int gain = spec.p + spec.n - spec.m;
  nb.delta = 2.0 * tn / gain + 0.01 + 4.0 * unit(rng);
  const double hyp_threshold = nb.delta * gain - tn;

  const auto g = random_function(spec, rng);
  const auto d = random_function(spec, rng);
  const auto build = [&](double s) {
    std::vector<Complex> a(d.coeffs().size());
    for (std::size_t i = 0; i < a.size(); ++i)
      a[i] = std::polar(1.0, -nb.alpha) * (s * d.coeffs()[i] + std::polar(1.0, nb.beta) * g.coeffs()[i]);
    return MultivalentFunction(spec.p, spec.n, std::move(a));
  };
  auto poly = derivative_difference(build(1.0), g, op, nb);
  const Complex c0 = poly[0];
  poly[0] = 0.0;
  const double qmax = max_modulus_on_circle(poly).value;
  if (!(qmax > 0.0)) return std::nullopt;
  const auto sup_at = [&](double s) {
    auto scaled = poly;
    for (auto& c : scaled) c *= s;
    scaled[0] = c0;
    return max_modulus_on_circle(scaled).value;
  };
  double lo = 0.0;
  double hi = (hyp_threshold + std::abs(c0)) / qmax;
  for (int it = 0; it < 60; ++it) {
    const double mid = 0.5 * (lo + hi);
    (sup_at(mid) < hyp_threshold ? lo : hi) = mid;
  }
  const double s = (0.05 + 0.94 * unit(rng)) * lo;
  const auto f = build(s);
  const auto check = derivative_bound_implication(f, g, op, nb);
  if (check.hypothesis.holds() && check.conclusion.holds()) return std::nullopt;
  return counterexample(spec, f, g, nb,
                        "hypothesis " + std::string(to_string(check.hypothesis.outcome)) + " (sup " +
                            std::to_string(check.hypothesis.lhs) + "), conclusion " +
                            to_string(check.conclusion.outcome) + " (sup " +
                            std::to_string(check.conclusion.lhs) + ")");
}

TrialResult example_partner_equality(std::mt19937_64& rng) {
  auto spec = random_spec(rng);
  spec.K = spec.n + std::uniform_int_distribution<int>(0, 50)(rng);
  std::uniform_real_distribution<double> angle(-pi, pi);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  NeighborhoodParams nb;
  nb.alpha = angle(rng);
  nb.beta = nb.alpha + angle(rng);
  const double T = lower_bound_N(spec.p, spec.m, nb);
  nb.delta = T + 0.01 + 4.0 * unit(rng);
  const auto g = random_function(spec, rng);
  const auto f = construct_example_partner(g, spec.op(), nb, spec.K);
  const double lhs = sufficient_N(f, g, spec.op(), nb).lhs;
  const int np = spec.n + spec.p;
  const double expected = (np - 1) * (nb.delta - T) * (1.0 / (np - 1) - 1.0 / (spec.K + spec.p));
  if (std::abs(lhs - expected) <= 1e-9 * std::abs(expected)) return std::nullopt;
  return counterexample(spec, f, g, nb,
                        "partner lhs " + std::to_string(lhs) + " vs closed form " + std::to_string(expected));
}

// ---- harness invariants ----------------------------------------------------

TrialResult oracle_agreement(std::mt19937_64& rng) {
  const int degree = std::uniform_int_distribution<int>(0, 64)(rng);
  std::normal_distribution<double> normal(0.0, 1.0 / std::sqrt(2.0 * (degree + 1)));
  std::vector<Complex> poly(static_cast<std::size_t>(degree + 1));
  for (auto& c : poly) c = {normal(rng), normal(rng)};
  const double production = max_modulus_on_circle(poly).value;
  const double oracle = sup_oracle(poly, 1 << 18);
  if (std::abs(production - oracle) <= kTol.sup) return std::nullopt;
  json coeffs = json::array();
  for (const auto& c : poly) coeffs.push_back(complex_to_json(c));
  return json{{"poly", coeffs}, {"production", production}, {"oracle", oracle},
              {"detail", "production sup disagrees with dense sampling"}};
}

TrialResult lemma_trial(std::mt19937_64& rng) {
  const int order = std::uniform_int_distribution<int>(1, 3)(rng);
  const int extra = std::uniform_int_distribution<int>(0, 10)(rng);
  const double r0 = std::uniform_real_distribution<double>(0.3, 0.9)(rng);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<Complex> w(static_cast<std::size_t>(order + extra + 1));
  for (std::size_t j = static_cast<std::size_t>(order); j < w.size(); ++j) w[j] = {normal(rng), normal(rng)};
  const auto witness = lemma_witness(w, order, r0);
  std::vector<Complex> scaled(w);
  double rj = 1.0;
  for (auto& c : scaled) {
    c *= rj;
    rj *= r0;
  }
  const double dense = sup_oracle(scaled, 1 << 16);
  if (witness.holds() && witness.max_modulus >= dense - kTol.sup * std::max(1.0, dense))
    return std::nullopt;
  json coeffs = json::array();
  for (const auto& c : w) coeffs.push_back(complex_to_json(c));
  return json{{"w", coeffs},
              {"order", order},
              {"r0", r0},
              {"q", complex_to_json(witness.q)},
              {"max_modulus", witness.max_modulus},
              {"dense_max", dense},
              {"detail", "lemma conclusion or maximizer check failed"}};
}

TrialResult generator_soundness(std::mt19937_64& rng) {
  const auto spec = random_spec(rng);
  const auto op = spec.op();
  const auto n = generate_pair(spec, Target::inside_sufficient_N);
  if (!sufficient_N(n.f, n.g, op, n.nb).holds() || !membership_N(n.f, n.g, op, n.nb).holds())
    return counterexample(spec, n.f, n.g, n.nb, "inside_sufficient_N instance outside N(g)");
  const auto m = generate_pair(spec, Target::inside_sufficient_M);
  if (!sufficient_M(m.f, m.g, op, m.nb).holds() || !membership_M(m.f, m.g, op, m.nb).holds())
    return counterexample(spec, m.f, m.g, m.nb, "inside_sufficient_M instance outside M(g)");
  return std::nullopt;
}

TrialResult determinism(std::mt19937_64& rng) {
  const auto spec = random_spec(rng);
  for (auto target : {Target::inside_sufficient_N, Target::inside_sufficient_M, Target::unconstrained}) {
    const auto x = generate_pair(spec, target);
    const auto y = generate_pair(spec, target);
    if (!(x.f == y.f && x.g == y.g && x.nb.alpha == y.nb.alpha && x.nb.beta == y.nb.beta &&
          x.nb.delta == y.nb.delta))
      return counterexample(spec, x.f, x.g, x.nb, "same seed produced different instances");
  }
  return std::nullopt;
}

const std::map<std::string, Trial>& registry() {
  static const std::map<std::string, Trial> suites = {
      {"salagean_first_order", salagean_first_order},
      {"salagean_semigroup", salagean_semigroup},
      {"operator_linearity", operator_linearity},
      {"operator_combination", operator_combination},
      {"prime_is_derivative", prime_is_derivative},
      {"weight_exactness", weight_exactness},
      {"rotation_invariance", rotation_invariance},
      {"thm_2_1_implication", [](auto& rng) { return sufficient_implies_membership(rng, true); }},
      {"thm_2_4_implication", [](auto& rng) { return sufficient_implies_membership(rng, false); }},
      {"cor_2_5_equality", [](auto& rng) { return modulus_equality(rng, true); }},
      {"cor_2_7_equality", [](auto& rng) { return modulus_equality(rng, false); }},
      {"telescoping_closed_form", telescoping_closed_form},
      {"monotonicity", monotonicity},
      {"weight_specialization", weight_specialization},
      {"thm_2_11_implication", [](auto& rng) { return derivative_bound(rng, false); }},
      {"cor_2_12_implication", [](auto& rng) { return derivative_bound(rng, true); }},
      {"example_partner_equality", example_partner_equality},
      {"oracle_agreement", oracle_agreement},
      {"lemma_witness", lemma_trial},
      {"generator_soundness", generator_soundness},
      {"determinism", determinism},
  };
  return suites;
}

}  // namespace

std::vector<std::string> property_suite_names() {
  std::vector<std::string> names;
  for (const auto& [name, unused] : registry()) names.push_back(name);
  return names;
}

SuiteReport run_property_suite(const std::string& suite, std::int64_t trials, std::uint64_t seed) {
  const auto it = registry().find(suite);
  if (it == registry().end()) throw InvalidArgument("unknown suite: " + suite);
  if (trials < 1) throw InvalidArgument("trials must be >= 1");

  SuiteReport report;
  report.suite = suite;
  report.trials = trials;
  report.seed = seed;
  const auto start = std::chrono::steady_clock::now();
  for (std::int64_t i = 0; i < trials; ++i) {
    std::mt19937_64 rng(trial_seed(seed, static_cast<std::uint64_t>(i)));
    TrialResult result;
    try {
      result = it->second(rng);
    } catch (const std::exception& e) {
      result = json{{"detail", std::string("trial threw: ") + e.what()}};
    }
    if (!result) {
      ++report.passed;
      continue;
    }
    if (report.failed++ == 0) {
      (*result)["trial"] = i;
      report.first_counterexample = std::move(*result);
    }
  }
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

json SuiteReport::to_json() const {
  return {{"schema", kReportSchema},
          {"kind", "suite"},
          {"suite", suite},
          {"trials", trials},
          {"seed", seed},
          {"passed", passed},
          {"failed", failed},
          {"first_counterexample", first_counterexample}};
}

std::string SuiteReport::summary() const {
  std::ostringstream out;
  out << "suite " << suite << ": " << passed << "/" << trials << " passed, " << failed
      << " failed (seed " << seed << ", " << wall_seconds << " s)\n";
  if (failed > 0) out << "first counterexample: " << first_counterexample.dump() << "\n";
  return out.str();
}

}  // namespace pvalent
