#include "pvalent/neighborhood.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "pvalent/boundary.hpp"
#include "pvalent/errors.hpp"

namespace pvalent {

using std::numbers::pi;

double NeighborhoodParams::angle_gap() const { return std::remainder(alpha - beta, 2.0 * pi); }

double NeighborhoodParams::chord() const { return 2.0 * std::abs(std::sin(0.5 * angle_gap())); }

const char* to_string(Outcome o) noexcept {
  switch (o) {
    case Outcome::holds: return "holds";
    case Outcome::fails: return "fails";
    case Outcome::falsified: return "falsified";
  }
  return "unknown";
}

double lower_bound_N(int p, int m, const NeighborhoodParams& nb) {
  return factorial_ratio(p, p - m - 1) * nb.chord();
}

double lower_bound_M(int p, int m, const NeighborhoodParams& nb) {
  return factorial_ratio(p, p - m) * nb.chord();
}

double threshold_N(double delta, double alpha, double beta, int p, int m) {
  if (m < 0 || p <= m) throw DomainError("require p > m >= 0");
  return delta - lower_bound_N(p, m, {alpha, beta, delta});
}

double threshold_M(double delta, double alpha, double beta, int p, int m) {
  if (m < 0 || p <= m) throw DomainError("require p > m >= 0");
  return delta - lower_bound_M(p, m, {alpha, beta, delta});
}

namespace {

constexpr double kMargin = kStandardTolerances.admissibility_margin;

struct Pair {
  MultivalentFunction f;
  MultivalentFunction g;
};

// Validates a pair and zero-extends both to the longer truncation order.
Pair align_pair(const MultivalentFunction& f, const MultivalentFunction& g,
                const OperatorParams& op) {
  if (f.p() != g.p() || f.n() != g.n())
    throw DomainError("f and g must share (p, n): got (" + std::to_string(f.p()) + ", " +
                      std::to_string(f.n()) + ") and (" + std::to_string(g.p()) + ", " +
                      std::to_string(g.n()) + ")");
  op.validate(f.p());
  const int K = std::max(f.order(), g.order());
  return {f.with_order(K), g.with_order(K)};
}

void require_delta_above(double delta, double bound, const char* which) {
  if (!(delta - bound > kMargin))
    throw DomainError(std::string("delta = ") + std::to_string(delta) +
                      " is not above the " + which + " lower bound " + std::to_string(bound));
}

void require_N_admissible(const Pair& pr, const OperatorParams& op, const NeighborhoodParams& nb) {
  require_delta_above(nb.delta, lower_bound_N(pr.f.p(), op.m, nb), "N(g)");
}

// Returns whether delta falls between the two published M-side bounds.
bool require_M_admissible(const Pair& pr, const OperatorParams& op,
                          const NeighborhoodParams& nb) {
  require_delta_above(nb.delta, lower_bound_M(pr.f.p(), op.m, nb), "M(g)");
  return !(nb.delta - lower_bound_N(pr.f.p(), op.m, nb) > kMargin);
}

Complex coefficient_difference(const Pair& pr, int k, const NeighborhoodParams& nb) {
  return std::polar(1.0, nb.alpha) * pr.f.coeff(k) - std::polar(1.0, nb.beta) * pr.g.coeff(k);
}

template <class Weight, class Term>
double weighted_sum(const Pair& pr, const Weight& weight, const Term& term) {
  double sum = 0.0;
  for (int k = pr.f.n(); k <= pr.f.order(); ++k) sum += weight(k) * term(k);
  return sum;
}

Verdict sum_verdict(double lhs, double threshold) {
  Verdict v;
  v.lhs = lhs;
  v.threshold = threshold;
  v.margin = threshold - lhs;
  v.outcome = lhs <= threshold ? Outcome::holds : Outcome::fails;
  return v;
}

Verdict sup_verdict(double lhs, double threshold) {
  Verdict v;
  v.lhs = lhs;
  v.threshold = threshold;
  v.margin = threshold - lhs;
  v.outcome = lhs < threshold ? Outcome::holds : Outcome::fails;
  return v;
}

constexpr const char* kBetweenBoundsNote =
    "delta exceeds p!/(p-m)! * chord but not p!/(p-m-1)! * chord";

void check_modulus_alignment(const Pair& pr, const NeighborhoodParams& nb, double tolerance) {
  const double target = nb.beta - nb.alpha;
  for (int k = pr.f.n(); k <= pr.f.order(); ++k) {
    const Complex a = pr.f.coeff(k);
    const Complex b = pr.g.coeff(k);
    if (a == Complex{} || b == Complex{}) continue;
    const double off = std::remainder(std::arg(a) - std::arg(b) - target, 2.0 * pi);
    if (std::abs(off) > tolerance)
      throw AlignmentError("arg a_{k+p} - arg b_{k+p} differs from beta - alpha by " +
                               std::to_string(off) + " at k = " + std::to_string(k),
                           static_cast<std::size_t>(k));
  }
}

void check_difference_alignment(const Pair& pr, const NeighborhoodParams& nb,
                                const ArgAlignment& align) {
  for (int k = pr.f.n(); k <= pr.f.order(); ++k) {
    const Complex d = coefficient_difference(pr, k, nb);
    if (d == Complex{}) continue;
    const double off = std::remainder(std::arg(d) - k * align.phi, 2.0 * pi);
    if (std::abs(off) > align.tolerance)
      throw AlignmentError("arg of the coefficient difference differs from k*phi by " +
                               std::to_string(off) + " at k = " + std::to_string(k),
                           static_cast<std::size_t>(k));
  }
}

void check_necessity_angles(const NeighborhoodParams& nb) {
  if (!(0.0 <= nb.alpha && nb.alpha < nb.beta && nb.beta <= pi))
    throw DomainError("necessity bound requires 0 <= alpha < beta <= pi");
}

}  // namespace

std::vector<Complex> derivative_difference(const MultivalentFunction& f,
                                           const MultivalentFunction& g,
                                           const OperatorParams& op,
                                           const NeighborhoodParams& nb) {
  const auto pr = align_pair(f, g, op);
  const auto pf = apply_operator_prime_normalized(pr.f, op).dense_quotient();
  const auto pg = apply_operator_prime_normalized(pr.g, op).dense_quotient();
  std::vector<Complex> out(pf.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = std::polar(1.0, nb.alpha) * pf[i] - std::polar(1.0, nb.beta) * pg[i];
  return out;
}

std::vector<Complex> operator_difference(const MultivalentFunction& f,
                                         const MultivalentFunction& g,
                                         const OperatorParams& op,
                                         const NeighborhoodParams& nb) {
  const auto pr = align_pair(f, g, op);
  const auto pf = apply_operator(pr.f, op).dense_quotient();
  const auto pg = apply_operator(pr.g, op).dense_quotient();
  std::vector<Complex> out(pf.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = std::polar(1.0, nb.alpha) * pf[i] - std::polar(1.0, nb.beta) * pg[i];
  return out;
}

Verdict sufficient_N(const MultivalentFunction& f, const MultivalentFunction& g,
                     const OperatorParams& op, const NeighborhoodParams& nb) {
  const auto pr = align_pair(f, g, op);
  require_N_admissible(pr, op, nb);
  const int p = pr.f.p();
  const double lhs = weighted_sum(
      pr, [&](int k) { return derivative_weight(k, p, op); },
      [&](int k) { return std::abs(coefficient_difference(pr, k, nb)); });
  return sum_verdict(lhs, threshold_N(nb.delta, nb.alpha, nb.beta, p, op.m));
}

Verdict sufficient_M(const MultivalentFunction& f, const MultivalentFunction& g,
                     const OperatorParams& op, const NeighborhoodParams& nb) {
  const auto pr = align_pair(f, g, op);
  const bool between = require_M_admissible(pr, op, nb);
  const int p = pr.f.p();
  const double lhs = weighted_sum(
      pr, [&](int k) { return operator_weight(k, p, op); },
      [&](int k) { return std::abs(coefficient_difference(pr, k, nb)); });
  auto v = sum_verdict(lhs, threshold_M(nb.delta, nb.alpha, nb.beta, p, op.m));
  v.between_m_bounds = between;
  if (between) v.note = kBetweenBoundsNote;
  return v;
}

Verdict sufficient_N_modulus(const MultivalentFunction& f, const MultivalentFunction& g,
                             const OperatorParams& op, const NeighborhoodParams& nb,
                             double tolerance) {
  const auto pr = align_pair(f, g, op);
  require_N_admissible(pr, op, nb);
  check_modulus_alignment(pr, nb, tolerance);
  const int p = pr.f.p();
  const double lhs = weighted_sum(
      pr, [&](int k) { return derivative_weight(k, p, op); },
      [&](int k) { return std::abs(std::abs(pr.f.coeff(k)) - std::abs(pr.g.coeff(k))); });
  return sum_verdict(lhs, threshold_N(nb.delta, nb.alpha, nb.beta, p, op.m));
}

Verdict sufficient_M_modulus(const MultivalentFunction& f, const MultivalentFunction& g,
                             const OperatorParams& op, const NeighborhoodParams& nb,
                             double tolerance) {
  const auto pr = align_pair(f, g, op);
  const bool between = require_M_admissible(pr, op, nb);
  check_modulus_alignment(pr, nb, tolerance);
  const int p = pr.f.p();
  const double lhs = weighted_sum(
      pr, [&](int k) { return operator_weight(k, p, op); },
      [&](int k) { return std::abs(std::abs(pr.f.coeff(k)) - std::abs(pr.g.coeff(k))); });
  auto v = sum_verdict(lhs, threshold_M(nb.delta, nb.alpha, nb.beta, p, op.m));
  v.between_m_bounds = between;
  if (between) v.note = kBetweenBoundsNote;
  return v;
}

Verdict membership_N(const MultivalentFunction& f, const MultivalentFunction& g,
                     const OperatorParams& op, const NeighborhoodParams& nb, int grid) {
  if (grid < 8) throw InvalidArgument("boundary grid must have at least 8 samples");
  const auto pr = align_pair(f, g, op);
  require_N_admissible(pr, op, nb);
  const auto diff = derivative_difference(pr.f, pr.g, op, nb);
  return sup_verdict(max_modulus_on_circle(diff, 1.0, grid).value, nb.delta);
}

Verdict membership_M(const MultivalentFunction& f, const MultivalentFunction& g,
                     const OperatorParams& op, const NeighborhoodParams& nb, int grid) {
  if (grid < 8) throw InvalidArgument("boundary grid must have at least 8 samples");
  const auto pr = align_pair(f, g, op);
  const bool between = require_M_admissible(pr, op, nb);
  const auto diff = operator_difference(pr.f, pr.g, op, nb);
  auto v = sup_verdict(max_modulus_on_circle(diff, 1.0, grid).value, nb.delta);
  v.between_m_bounds = between;
  if (between) v.note = kBetweenBoundsNote;
  return v;
}

Verdict necessary_N_bound(const MultivalentFunction& f, const MultivalentFunction& g,
                          const OperatorParams& op, const NeighborhoodParams& nb,
                          const ArgAlignment& align, int grid) {
  const auto pr = align_pair(f, g, op);
  check_necessity_angles(nb);
  check_difference_alignment(pr, nb, align);
  const auto member = membership_N(pr.f, pr.g, op, nb, grid);
  if (!member.holds())
    throw DomainError("hypothesis not met: f is not in N(g) (sup " + std::to_string(member.lhs) +
                      " >= delta " + std::to_string(nb.delta) + ")");
  const int p = pr.f.p();
  const double lhs = weighted_sum(
      pr, [&](int k) { return derivative_weight(k, p, op); },
      [&](int k) { return std::abs(coefficient_difference(pr, k, nb)); });
  const double threshold =
      nb.delta - factorial_ratio(p, p - op.m - 1) * (std::cos(nb.alpha) - std::cos(nb.beta));
  auto v = sum_verdict(lhs, threshold);
  if (!v.holds()) {
    v.outcome = Outcome::falsified;
    v.note = "membership in N(g) holds but the coefficient bound fails";
  }
  return v;
}

Verdict necessary_M_bound(const MultivalentFunction& f, const MultivalentFunction& g,
                          const OperatorParams& op, const NeighborhoodParams& nb,
                          const ArgAlignment& align, int grid) {
  const auto pr = align_pair(f, g, op);
  check_necessity_angles(nb);
  check_difference_alignment(pr, nb, align);
  const auto member = membership_M(pr.f, pr.g, op, nb, grid);
  if (!member.holds())
    throw DomainError("hypothesis not met: f is not in M(g) (sup " + std::to_string(member.lhs) +
                      " >= delta " + std::to_string(nb.delta) + ")");
  const int p = pr.f.p();
  const double lhs = weighted_sum(
      pr, [&](int k) { return operator_weight(k, p, op); },
      [&](int k) { return std::abs(coefficient_difference(pr, k, nb)); });
  const double threshold =
      nb.delta + factorial_ratio(p, p - op.m - 1) * (std::cos(nb.beta) - std::cos(nb.alpha));
  auto v = sum_verdict(lhs, threshold);
  v.between_m_bounds = member.between_m_bounds;
  if (!v.holds()) {
    v.outcome = Outcome::falsified;
    v.note = "membership in M(g) holds but the coefficient bound fails";
  } else if (member.between_m_bounds) {
    v.note = kBetweenBoundsNote;
  }
  return v;
}

MultivalentFunction construct_example_partner(const MultivalentFunction& g,
                                              const OperatorParams& op,
                                              const NeighborhoodParams& nb, int K) {
  const int p = g.p();
  const int n = g.n();
  const int m = op.m;
  op.validate(p);
  if (K < n) throw DomainError("truncation order K must be >= n");
  if (g.order() > K) throw DomainError("g has coefficients beyond the truncation order K");
  const double T = lower_bound_N(p, m, nb);
  if (!(nb.delta - T > kMargin))
    throw DomainError("construction is degenerate: delta must exceed " + std::to_string(T));

  const int base = p - m;
  const Complex rot_alpha = std::polar(1.0, -nb.alpha);
  const Complex rot_gap = std::polar(1.0, nb.beta - nb.alpha);
  std::vector<Complex> coeffs;
  coeffs.reserve(static_cast<std::size_t>(K - n + 1));
  for (int k = n; k <= K; ++k) {
    const double kp = k + p;
    // (p-m)^Omega / (k+p-m)^(Omega+1)
    double power_ratio = 1.0 / (k + base);
    for (int i = 0; i < op.omega; ++i) power_ratio *= static_cast<double>(base) / (k + base);
    const double magnitude = power_ratio * (nb.delta - T) * factorial_ratio(k + base, k + p - 1) *
                             (n + p - 1) /
                             ((1.0 + op.lambda * k / base) * kp * kp * (kp - 1.0));
    coeffs.push_back(magnitude * rot_alpha + rot_gap * g.coeff(k));
  }
  return {p, n, std::move(coeffs)};
}

ImplicationCheck derivative_bound_implication(const MultivalentFunction& f,
                                              const MultivalentFunction& g,
                                              const OperatorParams& op,
                                              const NeighborhoodParams& nb, int grid) {
  if (grid < 8) throw InvalidArgument("boundary grid must have at least 8 samples");
  const auto pr = align_pair(f, g, op);
  const int p = pr.f.p();
  const int n = pr.f.n();
  const double tn = lower_bound_N(p, op.m, nb);
  require_delta_above(nb.delta, tn / (p + n - op.m), "derivative-bound");

  const auto dd = derivative_difference(pr.f, pr.g, op, nb);
  const auto od = operator_difference(pr.f, pr.g, op, nb);
  ImplicationCheck out{
      sup_verdict(max_modulus_on_circle(dd, 1.0, grid).value, nb.delta * (p + n - op.m) - tn),
      sup_verdict(max_modulus_on_circle(od, 1.0, grid).value,
                  nb.delta + lower_bound_M(p, op.m, nb))};
  if (out.hypothesis.holds() && !out.conclusion.holds()) {
    out.conclusion.outcome = Outcome::falsified;
    out.conclusion.note = "derivative-side bound holds but the function-side bound fails";
  }
  return out;
}

}  // namespace pvalent
