#ifndef PVALENT_BOUNDARY_HPP
#define PVALENT_BOUNDARY_HPP

#include <span>

#include "pvalent/series.hpp"
#include "pvalent/tolerances.hpp"

namespace pvalent {

struct BoundaryMax {
  double value;  ///< max |P(z)| on |z| = radius
  double theta;  ///< argument of the maximizer, in [0, 2 pi)
  Complex z;     ///< the maximizer itself
};

/// Maximum modulus of a dense polynomial on the circle |z| = radius.
///
/// Samples `grid` equally spaced angles, then refines every local maximum of
/// the samples by ternary search on its two neighbouring cells down to
/// `resolution` in angle. For a polynomial this is also the supremum over
/// the open disk of the same radius. Throws InvalidArgument when grid < 8.
BoundaryMax max_modulus_on_circle(std::span<const Complex> poly, double radius = 1.0,
                                  int grid = kStandardTolerances.grid,
                                  double resolution = kStandardTolerances.angle_resolution);

}  // namespace pvalent

#endif
