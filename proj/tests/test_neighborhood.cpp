#include <doctest.h>

#include <cmath>
#include <numbers>

#include "pvalent/errors.hpp"
#include "pvalent/neighborhood.hpp"

using namespace pvalent;
using std::numbers::pi;

namespace {

const Complex I{0.0, 1.0};

}  // namespace

TEST_CASE("thresholds") {
  CHECK(threshold_N(3.0, 0.4, 0.4, 2, 1) == 3.0);
  CHECK(threshold_N(2.0, 0.0, pi / 2, 1, 0) == doctest::Approx(2.0 - std::sqrt(2.0)));
  CHECK(threshold_N(5.0, 0.0, pi, 2, 0) == doctest::Approx(1.0));
  CHECK(threshold_M(4.0, 1.0, 1.0, 3, 2) == 4.0);
  CHECK(threshold_M(5.0, 0.0, pi, 2, 0) == doctest::Approx(3.0));
  CHECK(threshold_M(10.0, 0.0, pi / 2, 3, 1) == doctest::Approx(10.0 - 3.0 * std::sqrt(2.0)));
  CHECK(threshold_N(0.5, 0.0, pi, 3, 0) < 0.0);
  CHECK_THROWS_AS(threshold_N(1.0, 0.0, 0.0, 2, 2), DomainError);
}

TEST_CASE("chord is periodic in the angle gap") {
  const NeighborhoodParams a{0.1, 0.1 + 2.0 * pi + 0.5, 1.0};
  const NeighborhoodParams b{0.0, 0.5, 1.0};
  CHECK(a.chord() == doctest::Approx(b.chord()));
  CHECK(NeighborhoodParams{0.0, pi, 1.0}.chord() == doctest::Approx(2.0));
}

TEST_CASE("sufficient conditions") {
  const OperatorParams plain{};
  SUBCASE("identical functions at alpha = beta") {
    const MultivalentFunction f(2, 1, {1.0, I});
    const auto v = sufficient_N(f, f, {0.4, 1, 2}, {0.3, 0.3, 0.7});
    CHECK(v.holds());
    CHECK(v.lhs == 0.0);
    CHECK(v.margin == doctest::Approx(0.7));
    CHECK(sufficient_M(f, f, {0.4, 1, 2}, {0.3, 0.3, 0.7}).lhs == 0.0);
  }
  SUBCASE("single difference 0.1 with p = 1") {
    const MultivalentFunction f(1, 1, {1.1, 0.5});
    const MultivalentFunction g(1, 1, {1.0, 0.5});
    const auto n = sufficient_N(f, g, plain, {0.0, 0.0, 0.25});
    CHECK(n.lhs == doctest::Approx(0.2));
    CHECK(n.holds());
    CHECK_FALSE(sufficient_N(f, g, plain, {0.0, 0.0, 0.19}).holds());
    const auto m = sufficient_M(f, g, plain, {0.0, 0.0, 0.2});
    CHECK(m.lhs == doctest::Approx(0.1));
  }
  SUBCASE("weight-ratio sandwich") {
    const OperatorParams op{0.25, 1, 2};
    const MultivalentFunction f(3, 2, {1.0, I, 0.5, -0.25});
    const MultivalentFunction g(3, 2, {0.5, 0.0, I, 1.0});
    const NeighborhoodParams nb{0.2, 0.9, 30.0};
    const double ln = sufficient_N(f, g, op, nb).lhs;
    const double lm = sufficient_M(f, g, op, nb).lhs;
    // k + p - m runs over 4..7
    CHECK(lm * 4.0 <= ln * (1.0 + 1e-15));
    CHECK(ln <= lm * 7.0 * (1.0 + 1e-15));
  }
  SUBCASE("shorter function is zero-extended") {
    const MultivalentFunction f(1, 1, {0.0, 0.0, 0.1});
    const MultivalentFunction g(1, 1);
    CHECK(sufficient_N(f, g, plain, {0.0, 0.0, 1.0}).lhs == doctest::Approx(0.4));
  }
}

TEST_CASE("sufficient condition errors") {
  const MultivalentFunction f(2, 1, {1.0});
  CHECK_THROWS_AS(sufficient_N(f, MultivalentFunction(3, 1), {}, {0, 0, 1}), DomainError);
  CHECK_THROWS_AS(sufficient_N(f, MultivalentFunction(2, 2), {}, {0, 0, 1}), DomainError);
  // N-side bound is 2 * chord = 4 at a half-turn
  CHECK_THROWS_AS(sufficient_N(f, f, {}, {0.0, pi, 4.0}), DomainError);
  CHECK_NOTHROW(sufficient_N(f, f, {}, {0.0, pi, 4.01}));
  CHECK_THROWS_AS(sufficient_N(f, f, {0.0, 2, 0}, {0, 0, 1}), DomainError);
}

TEST_CASE("M-side delta between the two lower bounds") {
  // p = 3, m = 1, half-turn: M bound 3 * 2 = 6, N bound 6 * 2 = 12
  const MultivalentFunction f(3, 1, {0.0});
  const OperatorParams op{0.0, 1, 0};
  const auto v = sufficient_M(f, f, op, {0.0, pi, 8.0});
  CHECK(v.between_m_bounds);
  CHECK_FALSE(v.note.empty());
  CHECK_FALSE(sufficient_M(f, f, op, {0.0, pi, 13.0}).between_m_bounds);
  CHECK_THROWS_AS(sufficient_M(f, f, op, {0.0, pi, 5.0}), DomainError);
}

TEST_CASE("modulus forms") {
  const OperatorParams op{0.5, 0, 1};
  const NeighborhoodParams nb{0.3, 1.1, 10.0};
  const double gap = nb.beta - nb.alpha;
  const MultivalentFunction f(2, 1, {std::polar(0.7, 0.2 + gap), std::polar(0.1, -1.0 + gap), 0.0});
  const MultivalentFunction g(2, 1, {std::polar(0.4, 0.2), std::polar(0.3, -1.0), std::polar(0.2, 2.0)});
  const auto plain = sufficient_N(f, g, op, nb);
  const auto modulus = sufficient_N_modulus(f, g, op, nb);
  CHECK(std::abs(plain.lhs - modulus.lhs) <= 1e-12 * plain.lhs);
  CHECK(std::abs(sufficient_M(f, g, op, nb).lhs - sufficient_M_modulus(f, g, op, nb).lhs) <= 1e-12);

  SUBCASE("real positive coefficients at alpha = beta") {
    const MultivalentFunction a(1, 1, {0.5, 0.25});
    const MultivalentFunction b(1, 1, {0.25, 1.0});
    CHECK(sufficient_N_modulus(a, b, {}, {0, 0, 5}).lhs == doctest::Approx(sufficient_N(a, b, {}, {0, 0, 5}).lhs));
  }
  SUBCASE("misalignment names the index") {
    const MultivalentFunction bad(2, 1, {std::polar(0.7, 0.2 + gap), std::polar(0.1, 0.0)});
    try {
      (void)sufficient_N_modulus(bad, g, op, nb);
      FAIL("expected AlignmentError");
    } catch (const AlignmentError& e) {
      CHECK(e.index() == 2);
    }
    CHECK_THROWS_AS(sufficient_M_modulus(bad, g, op, nb), AlignmentError);
  }
}

TEST_CASE("membership") {
  const OperatorParams plain{};
  const MultivalentFunction g(1, 1, {0.3, I});
  CHECK(membership_N(g, g, plain, {0.2, 0.2, 0.5}).lhs == doctest::Approx(0.0));
  // half-turn with no tail: difference is the constant 2 p!/(p-m-1)!
  const MultivalentFunction bare(1, 1);
  CHECK(membership_N(bare, bare, plain, {0.0, pi, 2.5}).lhs == doctest::Approx(2.0));
  CHECK(membership_N(bare, bare, plain, {0.0, pi, 2.5}).holds());
  CHECK_THROWS_AS(membership_N(bare, bare, plain, {0.0, pi, 2.0}), DomainError);
  const MultivalentFunction h(3, 2);
  const OperatorParams op{0.5, 1, 1};
  // constant 2 * 3!/2! = 6, admissible once delta > 6
  const auto m = membership_M(h, h, op, {0.0, pi, 7.0});
  CHECK(m.lhs == doctest::Approx(6.0));
  CHECK(m.between_m_bounds);
  CHECK(m.holds());
  CHECK_FALSE(membership_M(h, h, op, {0.0, pi, 6.0 + 1e-9}).lhs < 6.0 - 1e-9);
  CHECK_THROWS_AS(membership_N(g, g, plain, {0, 0, 1}, 4), InvalidArgument);
}

TEST_CASE("necessity bounds") {
  const OperatorParams plain{};
  SUBCASE("equal functions hold") {
    const MultivalentFunction g(2, 1);
    const auto v = necessary_N_bound(g, g, plain, {0.0, pi / 3, 3.0}, {0.0});
    CHECK(v.holds());
    CHECK(v.lhs == 0.0);
    CHECK(v.threshold == doctest::Approx(3.0 - 2.0 * (1.0 - 0.5)));
  }
  SUBCASE("real positive single-term difference") {
    // alpha = 0, beta = pi/2: e^{i0} a - i b = 0.05 when a = 0.05 + i b
    const MultivalentFunction g(1, 1, {0.1, 0.0});
    const MultivalentFunction f(1, 1, {0.05 + I * 0.1, 0.0});
    const NeighborhoodParams nb{0.0, pi / 2, 3.0};
    REQUIRE(membership_N(f, g, plain, nb).holds());
    const auto v = necessary_N_bound(f, g, plain, nb, {0.0});
    CHECK(v.lhs == doctest::Approx(0.1));
    CHECK(v.threshold == doctest::Approx(2.0));
    CHECK(v.holds());
  }
  SUBCASE("specialization to the p = 1 necessary form") {
    // alpha = 0: sum (k+1)|a_{k+1} - e^{i beta} b_{k+1}| <= delta + cos beta - 1
    const double beta = 0.8;
    const MultivalentFunction g(1, 1, {0.2, I * 0.1, 0.05});
    std::vector<Complex> a;
    for (int k = 1; k <= 3; ++k) a.push_back(0.02 / k + std::polar(1.0, beta) * g.coeff(k));
    const MultivalentFunction f(1, 1, a);
    const NeighborhoodParams nb{0.0, beta, 1.5};
    const auto v = necessary_N_bound(f, g, plain, nb, {0.0});
    CHECK(v.threshold == doctest::Approx(1.5 + std::cos(beta) - 1.0));
    CHECK(v.lhs == doctest::Approx(0.02 * (2.0 / 1 + 3.0 / 2 + 4.0 / 3)));
    CHECK(v.holds());
  }
  SUBCASE("M side at a quarter-turn") {
    const MultivalentFunction g(3, 1, {0.0});
    const OperatorParams op{0.0, 1, 0};
    const auto v = necessary_M_bound(g, g, op, {0.0, pi / 2, 7.0}, {0.0});
    // delta - p!/(p-m-1)! = 7 - 6
    CHECK(v.threshold == doctest::Approx(1.0));
    CHECK(v.holds());
  }
  SUBCASE("M side is falsifiable when p - m >= 2") {
    // membership_M of f = g is the constant sqrt(2) < 2, yet 0 > 2 - 3!/2!
    const MultivalentFunction g(3, 1);
    const NeighborhoodParams nb{0.0, pi / 2, 2.0};
    REQUIRE(membership_M(g, g, plain, nb).holds());
    const auto v = necessary_M_bound(g, g, plain, nb, {0.0});
    CHECK(v.outcome == Outcome::falsified);
    CHECK(v.threshold == doctest::Approx(-1.0));
    CHECK_FALSE(v.note.empty());
  }
  SUBCASE("violated hypotheses are rejected") {
    const MultivalentFunction g(1, 1, {0.1});
    CHECK_THROWS_AS(necessary_N_bound(g, g, plain, {0.5, 0.5, 2.0}, {0.0}), DomainError);
    CHECK_THROWS_AS(necessary_N_bound(g, g, plain, {-0.1, 1.0, 2.0}, {0.0}), DomainError);
    CHECK_THROWS_AS(necessary_N_bound(g, g, plain, {0.0, 4.0, 3.0}, {0.0}), DomainError);
    const MultivalentFunction f(1, 1, {0.1 + I * 0.05});
    CHECK_THROWS_AS(necessary_N_bound(f, g, plain, {0.0, 0.1, 2.0}, {0.0}), AlignmentError);
    // alignment fine, but f is far outside N(g)
    const MultivalentFunction far(1, 1, {3.0});
    CHECK_THROWS_AS(necessary_N_bound(far, g, plain, {0.0, 0.1, 0.5}, {0.0}), DomainError);
  }
}

TEST_CASE("telescoping partner") {
  const OperatorParams op{0.5, 1, 2};
  const MultivalentFunction g(3, 2, {0.1, I * 0.2, -0.05});
  const NeighborhoodParams nb{0.4, 1.3, 40.0};
  const double T = lower_bound_N(3, 1, nb);
  SUBCASE("each term is (n+p-1)(delta-T)/((k+p)(k+p-1))") {
    const int K = 9;
    const auto f = construct_example_partner(g, op, nb, K);
    CHECK(f.order() == K);
    const auto d = derivative_difference(f, g, op, nb);
    for (int k = 2; k <= K; ++k)
      CHECK(std::abs(d[static_cast<std::size_t>(k)]) ==
            doctest::Approx(4.0 * (nb.delta - T) / ((k + 3.0) * (k + 2.0))).epsilon(1e-12));
    const auto v = sufficient_N(f, g, op, nb);
    CHECK(v.lhs == doctest::Approx(4.0 * (nb.delta - T) * (0.25 - 1.0 / 12.0)).epsilon(1e-12));
    CHECK(v.margin == doctest::Approx(4.0 * (nb.delta - T) / 12.0).epsilon(1e-12));
  }
  SUBCASE("K = n leaves a single term") {
    const MultivalentFunction g1(3, 2);
    const auto f = construct_example_partner(g1, op, nb, 2);
    CHECK(sufficient_N(f, g1, op, nb).lhs == doctest::Approx((nb.delta - T) / 5.0).epsilon(1e-12));
  }
  SUBCASE("B = 0 and alpha = beta gives real positive coefficients") {
    const MultivalentFunction zero(1, 1);
    const auto f = construct_example_partner(zero, {}, {0.0, 0.0, 2.0}, 6);
    for (int k = 1; k <= 6; ++k) {
      // 1/(k+1)^2 * 2 * 1 / (k+1) / k, times (k+1) from weight: 2/(k(k+1))
      CHECK(f.coeff(k).imag() == 0.0);
      CHECK(f.coeff(k).real() == doctest::Approx(2.0 / (k * (k + 1.0) * (k + 1.0))));
    }
  }
  CHECK_THROWS_AS(construct_example_partner(g, op, {0.0, pi, 12.0}, 8), DomainError);
  CHECK_THROWS_AS(construct_example_partner(g, op, nb, 3), DomainError);
  CHECK_THROWS_AS(construct_example_partner(g, op, nb, 1), DomainError);
}

TEST_CASE("derivative-bound implication") {
  const OperatorParams op{0.2, 0, 1};
  const MultivalentFunction g(2, 1, {0.1, 0.05});
  SUBCASE("identical functions") {
    const auto r = derivative_bound_implication(g, g, op, {0.5, 0.5, 1.0});
    CHECK(r.hypothesis.holds());
    CHECK(r.conclusion.holds());
    CHECK(r.hypothesis.lhs == doctest::Approx(0.0));
  }
  SUBCASE("m = 0 thresholds") {
    const NeighborhoodParams nb{0.0, 1.0, 3.0};
    const double c = std::sqrt(2.0 * (1.0 - std::cos(1.0)));
    const auto r = derivative_bound_implication(g, g, op, nb);
    CHECK(r.hypothesis.threshold == doctest::Approx(3.0 * 3 - 2.0 * c));
    CHECK(r.conclusion.threshold == doctest::Approx(3.0 + c));
    CHECK(r.hypothesis.holds());
    CHECK(r.conclusion.holds());
  }
  // bound is p!/(p-m-1)! chord / (p+n-m) = 2 * 2 / 3
  CHECK_THROWS_AS(derivative_bound_implication(g, g, op, {0.0, pi, 4.0 / 3.0}), DomainError);
  CHECK_NOTHROW(derivative_bound_implication(g, g, op, {0.0, pi, 1.34}));
}
