#ifndef PVALENT_NEIGHBORHOOD_HPP
#define PVALENT_NEIGHBORHOOD_HPP

#include <string>
#include <vector>

#include "pvalent/series.hpp"
#include "pvalent/tolerances.hpp"

namespace pvalent {

/// Phase twists (alpha, beta) and radius delta of a neighborhood.
struct NeighborhoodParams {
  double alpha = 0.0;
  double beta = 0.0;
  double delta = 1.0;

  /// alpha - beta reduced into [-pi, pi].
  double angle_gap() const;
  /// |e^{i alpha} - e^{i beta}| = sqrt(2 [1 - cos(alpha - beta)]).
  double chord() const;
};

enum class Outcome {
  holds,
  fails,
  /// Every hypothesis of an implication passed but its conclusion did not.
  falsified,
};

const char* to_string(Outcome o) noexcept;

/// Result of a criterion: sum-type checks hold iff lhs <= threshold,
/// sup-type checks iff lhs < threshold.
struct Verdict {
  Outcome outcome = Outcome::fails;
  double lhs = 0.0;
  double threshold = 0.0;
  double margin = 0.0;  ///< threshold - lhs
  /// delta clears the (p-m)! lower bound for M(g) but not the (p-m-1)! one.
  bool between_m_bounds = false;
  std::string note;

  bool holds() const noexcept { return outcome == Outcome::holds; }
};

/// Hypothesis arg(e^{i alpha} a_{k+p} - e^{i beta} b_{k+p}) = k phi.
struct ArgAlignment {
  double phi = 0.0;
  double tolerance = kStandardTolerances.alignment;
};

/// p!/(p-m-1)! * chord: lower bound on delta for N(g).
double lower_bound_N(int p, int m, const NeighborhoodParams& nb);
/// p!/(p-m)! * chord: lower bound on delta for the M(g) coefficient criterion.
double lower_bound_M(int p, int m, const NeighborhoodParams& nb);

double threshold_N(double delta, double alpha, double beta, int p, int m);
double threshold_M(double delta, double alpha, double beta, int p, int m);

/// Dense coefficients of e^{ia} F'(f^(m))/z^{p-m-1} - e^{ib} F'(g^(m))/z^{p-m-1}.
std::vector<Complex> derivative_difference(const MultivalentFunction& f,
                                           const MultivalentFunction& g,
                                           const OperatorParams& op,
                                           const NeighborhoodParams& nb);

/// Dense coefficients of e^{ia} F(f^(m))/z^{p-m} - e^{ib} F(g^(m))/z^{p-m}.
std::vector<Complex> operator_difference(const MultivalentFunction& f,
                                         const MultivalentFunction& g,
                                         const OperatorParams& op,
                                         const NeighborhoodParams& nb);

Verdict sufficient_N(const MultivalentFunction& f, const MultivalentFunction& g,
                     const OperatorParams& op, const NeighborhoodParams& nb);
Verdict sufficient_M(const MultivalentFunction& f, const MultivalentFunction& g,
                     const OperatorParams& op, const NeighborhoodParams& nb);

/// Modulus form of the sufficient conditions, valid when
/// arg a_{k+p} - arg b_{k+p} = beta - alpha at every index where both are
/// nonzero. Throws AlignmentError naming the first offending index.
Verdict sufficient_N_modulus(const MultivalentFunction& f, const MultivalentFunction& g,
                             const OperatorParams& op, const NeighborhoodParams& nb,
                             double tolerance = kStandardTolerances.alignment);
Verdict sufficient_M_modulus(const MultivalentFunction& f, const MultivalentFunction& g,
                             const OperatorParams& op, const NeighborhoodParams& nb,
                             double tolerance = kStandardTolerances.alignment);

/// Definitional membership: sup over the disk of the normalized difference,
/// computed on the boundary circle, against delta.
Verdict membership_N(const MultivalentFunction& f, const MultivalentFunction& g,
                     const OperatorParams& op, const NeighborhoodParams& nb,
                     int grid = kStandardTolerances.grid);
Verdict membership_M(const MultivalentFunction& f, const MultivalentFunction& g,
                     const OperatorParams& op, const NeighborhoodParams& nb,
                     int grid = kStandardTolerances.grid);

/// Coefficient bound implied by membership in N(g) when 0 <= alpha < beta <= pi
/// and the differences are phase aligned. A failed bound with all hypotheses
/// met is reported as Outcome::falsified.
Verdict necessary_N_bound(const MultivalentFunction& f, const MultivalentFunction& g,
                          const OperatorParams& op, const NeighborhoodParams& nb,
                          const ArgAlignment& align, int grid = kStandardTolerances.grid);
/// M(g) counterpart, threshold delta + p!/(p-m-1)! (cos beta - cos alpha).
Verdict necessary_M_bound(const MultivalentFunction& f, const MultivalentFunction& g,
                          const OperatorParams& op, const NeighborhoodParams& nb,
                          const ArgAlignment& align, int grid = kStandardTolerances.grid);

/// Partner f of g, truncated at K, whose N-side coefficient sum is the
/// telescoping series (n+p-1)(delta - T) sum 1/((k+p-1)(k+p)).
MultivalentFunction construct_example_partner(const MultivalentFunction& g,
                                              const OperatorParams& op,
                                              const NeighborhoodParams& nb, int K);

struct ImplicationCheck {
  Verdict hypothesis;
  Verdict conclusion;
};

/// sup |derivative difference| < delta (p+n-m) - p!/(p-m-1)! chord implies
/// sup |operator difference| < delta + p!/(p-m)! chord.
ImplicationCheck derivative_bound_implication(const MultivalentFunction& f,
                                              const MultivalentFunction& g,
                                              const OperatorParams& op,
                                              const NeighborhoodParams& nb,
                                              int grid = kStandardTolerances.grid);

}  // namespace pvalent

#endif
