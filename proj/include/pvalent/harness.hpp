#ifndef PVALENT_HARNESS_HPP
#define PVALENT_HARNESS_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pvalent/neighborhood.hpp"
#include "pvalent/series.hpp"
#include "pvalent/tolerances.hpp"

namespace pvalent {

/// Recipe for a random pair (f, g). Same seed, same instance.
struct InstanceSpec {
  int p = 2;
  int n = 1;
  int m = 0;
  int omega = 0;
  double lambda = 0.0;
  int K = 4;
  double coeff_magnitude = 1.0;
  std::uint64_t seed = 0;

  /// Throws InvalidArgument unless p > m >= 0, n >= 1, K >= n, Omega >= 0,
  /// lambda in [0, 1] and coeff_magnitude > 0.
  void validate() const;
  OperatorParams op() const { return {lambda, m, omega}; }
};

enum class Target { inside_sufficient_N, inside_sufficient_M, unconstrained };

struct GeneratedPair {
  MultivalentFunction f;
  MultivalentFunction g;
  NeighborhoodParams nb;
};

/// Random tail for k = n..K: capped complex Gaussians, coefficient k capped
/// at coeff_magnitude / derivative_weight(k) so every index contributes on
/// the same scale to the weighted sums.
MultivalentFunction random_function(const InstanceSpec& spec, std::mt19937_64& rng);

/// Draws g and the twisted differences e^{ia} a_{k+p} - e^{ib} b_{k+p} with
/// random_function. For the inside_* targets the differences are
/// rescaled so the sum-type lhs lands at a uniform fraction in (0, 0.95] of
/// the threshold; difference_scale then multiplies them once more (0 makes
/// every twisted difference vanish). delta is drawn at least 0.01 above its
/// admissibility bound.
GeneratedPair generate_pair(const InstanceSpec& spec, Target target,
                            double difference_scale = 1.0);

/// Seed for trial `index` of a run seeded with `seed` (splitmix64 mixing).
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index);

/// A random valid InstanceSpec with small parameters, seeded from `rng`.
InstanceSpec random_spec(std::mt19937_64& rng);

struct LemmaWitness {
  std::vector<Complex> w_coeffs;
  int order = 1;  ///< n_w, guaranteed vanishing order at the origin
  double r0 = 0.5;
  Complex z0;           ///< max-modulus point on |z| = r0
  double max_modulus;   ///< |w(z0)|
  Complex q;            ///< z0 w'(z0) / w(z0)
  bool q_real = false;  ///< |Im q| <= tolerance
  bool q_at_least_order = false;  ///< Re q >= order - tolerance

  bool holds() const noexcept { return q_real && q_at_least_order; }
};

/// Locates the maximum of |w| on |z| = r0 and evaluates z0 w'(z0)/w(z0).
/// w_coeffs[j] is the coefficient of z^j. Throws DomainError when w is
/// identically zero or has a nonzero coefficient below z^order.
LemmaWitness lemma_witness(std::span<const Complex> w_coeffs, int order, double r0,
                           int grid = kStandardTolerances.grid,
                           double tolerance = kStandardTolerances.lemma);

/// Max modulus on |z| = 1 by plain sampling at `grid` equally spaced angles
/// (computed with an FFT, no refinement).
double sup_oracle(std::span<const Complex> poly, int grid);

struct SuiteReport {
  std::string suite;
  std::int64_t trials = 0;
  std::uint64_t seed = 0;
  std::int64_t passed = 0;
  std::int64_t failed = 0;
  /// Full instance of the first failing trial, null when none failed.
  nlohmann::json first_counterexample;
  double wall_seconds = 0.0;

  /// Machine-readable document; excludes wall time so it is a pure
  /// function of (suite, trials, seed).
  nlohmann::json to_json() const;
  /// Line-oriented human summary.
  std::string summary() const;
};

/// Names accepted by run_property_suite.
std::vector<std::string> property_suite_names();

/// Runs `trials` independent trials of the named invariant. Throws
/// InvalidArgument for an unknown suite or trials < 1.
SuiteReport run_property_suite(const std::string& suite, std::int64_t trials,
                               std::uint64_t seed);

}  // namespace pvalent

#endif
