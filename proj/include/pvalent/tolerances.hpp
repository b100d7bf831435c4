#ifndef PVALENT_TOLERANCES_HPP
#define PVALENT_TOLERANCES_HPP

namespace pvalent {

/// Numeric policy shared by the criteria, the harness and the CLI.
struct Tolerances {
  /// Agreement between two independent sup-modulus computations.
  double sup = 1e-6;
  /// Coefficientwise identities: absolute or relative, whichever is looser.
  double coeff_abs = 1e-10;
  double coeff_rel = 1e-9;
  /// delta must exceed its lower bound by more than this.
  double admissibility_margin = 1e-12;
  /// Default phase tolerance for alignment hypotheses, radians.
  double alignment = 1e-8;
  /// Lemma conclusions (Im q ~ 0, Re q >= order).
  double lemma = 1e-6;
  /// Angular resolution of the ternary refinement on the circle.
  double angle_resolution = 1e-10;
  /// Default number of boundary samples.
  int grid = 4096;
};

inline constexpr Tolerances kStandardTolerances{};

}  // namespace pvalent

#endif
