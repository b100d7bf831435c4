#include "pvalent/boundary.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "pvalent/errors.hpp"

namespace pvalent {

namespace {

struct Sampler {
  std::span<const Complex> poly;
  double radius;

  double operator()(double theta) const {
    return std::abs(evaluate(poly, std::polar(radius, theta)));
  }
};

// Ternary search for a maximum of f on [lo, hi].
template <class F>
double ternary_argmax(const F& f, double lo, double hi, double resolution) {
  while (hi - lo > resolution) {
    const double third = (hi - lo) / 3.0;
    const double m1 = lo + third;
    const double m2 = hi - third;
    if (f(m1) < f(m2))
      lo = m1;
    else
      hi = m2;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

BoundaryMax max_modulus_on_circle(std::span<const Complex> poly, double radius, int grid,
                                  double resolution) {
  if (grid < 8) throw InvalidArgument("boundary grid must have at least 8 samples");
  if (!(radius > 0.0)) throw InvalidArgument("radius must be positive");
  const Sampler f{poly, radius};
  const double step = 2.0 * std::numbers::pi / grid;

  std::vector<double> samples(static_cast<std::size_t>(grid));
  for (int i = 0; i < grid; ++i) samples[static_cast<std::size_t>(i)] = f(i * step);

  std::size_t best_i = 0;
  for (std::size_t i = 1; i < samples.size(); ++i)
    if (samples[i] > samples[best_i]) best_i = i;
  double best_theta = static_cast<double>(best_i) * step;
  double best = samples[best_i];

  const auto at = [&](std::ptrdiff_t i) {
    const auto g = static_cast<std::ptrdiff_t>(grid);
    return samples[static_cast<std::size_t>(((i % g) + g) % g)];
  };
  for (std::ptrdiff_t i = 0; i < grid; ++i) {
    const double v = at(i);
    // strict on the left so flat runs are refined once at most
    const bool local_max = v > at(i - 1) && v >= at(i + 1);
    if (!local_max && static_cast<std::size_t>(i) != best_i) continue;
    const double centre = static_cast<double>(i) * step;
    const double theta = ternary_argmax(f, centre - step, centre + step, resolution);
    const double refined = f(theta);
    if (refined > best) {
      best = refined;
      best_theta = theta;
    }
  }

  best_theta = std::fmod(best_theta, 2.0 * std::numbers::pi);
  if (best_theta < 0.0) best_theta += 2.0 * std::numbers::pi;
  return {best, best_theta, std::polar(radius, best_theta)};
}

}  // namespace pvalent
