#include "pvalent/harness.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fftw3.h>

#include "pvalent/boundary.hpp"
#include "pvalent/errors.hpp"

namespace pvalent {

using std::numbers::pi;

void InstanceSpec::validate() const {
  if (p < 1) throw InvalidArgument("instance spec: p must be >= 1");
  if (m < 0 || p <= m) throw InvalidArgument("instance spec: require p > m >= 0");
  if (n < 1) throw InvalidArgument("instance spec: n must be >= 1");
  if (K < n) throw InvalidArgument("instance spec: K must be >= n");
  if (omega < 0) throw InvalidArgument("instance spec: Omega must be >= 0");
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw InvalidArgument("instance spec: lambda not in [0, 1]");
  if (!(coeff_magnitude > 0.0) || !std::isfinite(coeff_magnitude))
    throw InvalidArgument("instance spec: coeff_magnitude must be positive");
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

InstanceSpec random_spec(std::mt19937_64& rng) {
  InstanceSpec s;
  s.p = std::uniform_int_distribution<int>(1, 5)(rng);
  s.m = std::uniform_int_distribution<int>(0, s.p - 1)(rng);
  s.omega = std::uniform_int_distribution<int>(0, 4)(rng);
  s.n = std::uniform_int_distribution<int>(1, 3)(rng);
  s.K = s.n + std::uniform_int_distribution<int>(0, 9)(rng);
  s.lambda = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
  s.coeff_magnitude = 1.0;
  s.seed = rng();
  return s;
}

namespace {

Complex capped_gaussian(std::mt19937_64& rng, double cap) {
  std::normal_distribution<double> normal(0.0, 0.5 * cap);
  Complex c{normal(rng), normal(rng)};
  const double r = std::abs(c);
  if (r > cap) c *= cap / r;
  return c;
}

}  // namespace

MultivalentFunction random_function(const InstanceSpec& spec, std::mt19937_64& rng) {
  spec.validate();
  const auto op = spec.op();
  std::vector<Complex> c(static_cast<std::size_t>(spec.K - spec.n + 1));
  for (std::size_t i = 0; i < c.size(); ++i) {
    const int k = spec.n + static_cast<int>(i);
    c[i] = capped_gaussian(rng, spec.coeff_magnitude / derivative_weight(k, spec.p, op));
  }
  return {spec.p, spec.n, std::move(c)};
}

GeneratedPair generate_pair(const InstanceSpec& spec, Target target, double difference_scale) {
  spec.validate();
  if (!std::isfinite(difference_scale)) throw InvalidArgument("difference scale must be finite");
  std::mt19937_64 rng(spec.seed);
  std::uniform_real_distribution<double> angle(-pi, pi);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const auto op = spec.op();

  NeighborhoodParams nb;
  nb.alpha = angle(rng);
  nb.beta = nb.alpha + angle(rng);
  const double bound =
      target == Target::inside_sufficient_M ? lower_bound_M(spec.p, spec.m, nb) : lower_bound_N(spec.p, spec.m, nb);
  nb.delta = bound + 0.01 + 4.0 * unit(rng);

  const auto len = static_cast<std::size_t>(spec.K - spec.n + 1);
  const auto g = random_function(spec, rng);
  const auto drawn = random_function(spec, rng);
  std::vector<Complex> bv(g.coeffs().begin(), g.coeffs().end());
  std::vector<Complex> d(drawn.coeffs().begin(), drawn.coeffs().end());
  if (std::all_of(d.begin(), d.end(), [](Complex c) { return c == Complex{}; }))
    d.front() = spec.coeff_magnitude / derivative_weight(spec.n, spec.p, op);

  if (target != Target::unconstrained) {
    const bool n_side = target == Target::inside_sufficient_N;
    double lhs = 0.0;
    for (std::size_t i = 0; i < len; ++i) {
      const int k = spec.n + static_cast<int>(i);
      lhs += (n_side ? derivative_weight(k, spec.p, op) : operator_weight(k, spec.p, op)) * std::abs(d[i]);
    }
    const double threshold = n_side ? threshold_N(nb.delta, nb.alpha, nb.beta, spec.p, spec.m)
                                    : threshold_M(nb.delta, nb.alpha, nb.beta, spec.p, spec.m);
    if (!(threshold > 0.0) || !(lhs > 0.0)) throw InvalidArgument("instance spec: target unsatisfiable");
    const double fraction = 0.95 * (1.0 - unit(rng));
    for (auto& c : d) c *= fraction * threshold / lhs;
  }
  for (auto& c : d) c *= difference_scale;

  std::vector<Complex> a(len);
  const Complex untwist = std::polar(1.0, -nb.alpha);
  const Complex twist_b = std::polar(1.0, nb.beta);
  for (std::size_t i = 0; i < len; ++i) a[i] = untwist * (d[i] + twist_b * bv[i]);

  return {MultivalentFunction(spec.p, spec.n, std::move(a)),
          MultivalentFunction(spec.p, spec.n, std::move(bv)), nb};
}

LemmaWitness lemma_witness(std::span<const Complex> w_coeffs, int order, double r0, int grid,
                           double tolerance) {
  if (order < 1) throw DomainError("vanishing order must be >= 1");
  if (!(r0 > 0.0 && r0 < 1.0)) throw DomainError("radius must lie in (0, 1)");
  for (std::size_t j = 0; j < w_coeffs.size() && j < static_cast<std::size_t>(order); ++j)
    if (w_coeffs[j] != Complex{})
      throw DomainError("w has a nonzero coefficient at z^" + std::to_string(j) +
                        ", below the vanishing order " + std::to_string(order));
  if (std::all_of(w_coeffs.begin(), w_coeffs.end(), [](Complex c) { return c == Complex{}; }))
    throw DomainError("w is identically zero");

  std::vector<Complex> dw(w_coeffs.size() > 1 ? w_coeffs.size() - 1 : 1);
  for (std::size_t j = 1; j < w_coeffs.size(); ++j) dw[j - 1] = static_cast<double>(j) * w_coeffs[j];
  const auto q_at = [&](double theta) {
    const Complex z = std::polar(r0, theta);
    return z * evaluate(std::span<const Complex>(dw), z) / evaluate(w_coeffs, z);
  };

  const auto top = max_modulus_on_circle(w_coeffs, r0, grid);
  double theta = top.theta;
  // d/dtheta log|w| = -Im q, so Im q crosses from negative to positive at a maximum
  double lo = theta - 1e-7;
  double hi = theta + 1e-7;
  if (q_at(lo).imag() < 0.0 && q_at(hi).imag() > 0.0) {
    for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      (q_at(mid).imag() < 0.0 ? lo : hi) = mid;
    }
    const double polished = 0.5 * (lo + hi);
    if (std::abs(evaluate(w_coeffs, std::polar(r0, polished))) >= top.value * (1.0 - 1e-15))
      theta = polished;
  }

  LemmaWitness out;
  out.w_coeffs.assign(w_coeffs.begin(), w_coeffs.end());
  out.order = order;
  out.r0 = r0;
  out.z0 = std::polar(r0, theta);
  out.max_modulus = std::abs(evaluate(w_coeffs, out.z0));
  out.q = q_at(theta);
  out.q_real = std::abs(out.q.imag()) <= tolerance;
  out.q_at_least_order = out.q.real() >= order - tolerance;
  return out;
}

double sup_oracle(std::span<const Complex> poly, int grid) {
  if (grid < 1) throw InvalidArgument("oracle grid must be positive");
  const auto n = static_cast<std::size_t>(grid);
  auto* in = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * n));
  auto* out = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * n));
  for (std::size_t i = 0; i < n; ++i) in[i][0] = in[i][1] = 0.0;
  // z^j and z^(j mod grid) agree on the sample points
  for (std::size_t j = 0; j < poly.size(); ++j) {
    in[j % n][0] += poly[j].real();
    in[j % n][1] += poly[j].imag();
  }
  fftw_plan plan = fftw_plan_dft_1d(grid, in, out, FFTW_BACKWARD, FFTW_ESTIMATE);
  fftw_execute(plan);
  double best = 0.0;
  for (std::size_t i = 0; i < n; ++i) best = std::max(best, std::hypot(out[i][0], out[i][1]));
  fftw_destroy_plan(plan);
  fftw_free(in);
  fftw_free(out);
  return best;
}

}  // namespace pvalent
