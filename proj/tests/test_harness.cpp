#include <doctest.h>

#include <numbers>

#include "pvalent/errors.hpp"
#include "pvalent/harness.hpp"

using namespace pvalent;

TEST_CASE("instance spec validation") {
  InstanceSpec s;
  CHECK_NOTHROW(s.validate());
  s.m = 2;
  CHECK_THROWS_AS(s.validate(), InvalidArgument);
  s = {};
  s.K = 0;
  CHECK_THROWS_AS(s.validate(), InvalidArgument);
  s = {};
  s.lambda = 1.5;
  CHECK_THROWS_AS(s.validate(), InvalidArgument);
  s = {};
  s.coeff_magnitude = 0.0;
  CHECK_THROWS_AS(generate_pair(s, Target::unconstrained), InvalidArgument);
}

TEST_CASE("generated pairs") {
  const InstanceSpec spec{3, 2, 1, 2, 0.4, 9, 1.0, 12345};
  const auto op = spec.op();
  SUBCASE("inside targets satisfy their sufficient condition") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      auto s = spec;
      s.seed = seed;
      const auto n = generate_pair(s, Target::inside_sufficient_N);
      const auto vn = sufficient_N(n.f, n.g, op, n.nb);
      CHECK(vn.holds());
      CHECK(vn.lhs <= 0.95 * vn.threshold * (1.0 + 1e-12));
      CHECK(n.nb.delta >= lower_bound_N(s.p, s.m, n.nb) + 0.01);
      const auto m = generate_pair(s, Target::inside_sufficient_M);
      CHECK(sufficient_M(m.f, m.g, op, m.nb).holds());
      CHECK(m.nb.delta >= lower_bound_M(s.p, s.m, m.nb) + 0.01);
    }
  }
  SUBCASE("same seed, same instance") {
    const auto x = generate_pair(spec, Target::inside_sufficient_N);
    const auto y = generate_pair(spec, Target::inside_sufficient_N);
    CHECK(x.f == y.f);
    CHECK(x.g == y.g);
    CHECK(x.nb.delta == y.nb.delta);
    auto other = spec;
    other.seed = spec.seed + 1;
    CHECK_FALSE(generate_pair(other, Target::inside_sufficient_N).g == x.g);
  }
  SUBCASE("zero difference scale removes every twisted difference") {
    const auto z = generate_pair(spec, Target::inside_sufficient_N, 0.0);
    CHECK(sufficient_N(z.f, z.g, op, z.nb).lhs <= 1e-12);
    const auto aligned = generate_pair({1, 1, 0, 0, 0.0, 3, 1.0, 9}, Target::unconstrained, 0.0);
    if (aligned.nb.chord() < 1e-15) CHECK(aligned.f == aligned.g);
  }
  CHECK(generate_pair(spec, Target::unconstrained).f.order() == spec.K);
}

TEST_CASE("trial seeds are distinct and stable") {
  CHECK(trial_seed(7, 0) == trial_seed(7, 0));
  CHECK(trial_seed(7, 0) != trial_seed(7, 1));
  CHECK(trial_seed(7, 0) != trial_seed(8, 0));
}

TEST_CASE("lemma witness") {
  SUBCASE("monomial") {
    for (int n = 1; n <= 4; ++n) {
      std::vector<Complex> w(static_cast<std::size_t>(n + 1));
      w.back() = 1.0;
      const auto lw = lemma_witness(w, n, 0.6);
      CHECK(lw.q.real() == doctest::Approx(n));
      CHECK(std::abs(lw.q.imag()) < 1e-12);
      CHECK(lw.holds());
    }
  }
  SUBCASE("z + z^2/2 on r0 = 1/2") {
    const auto lw = lemma_witness(std::vector<Complex>{0.0, 1.0, 0.5}, 1, 0.5);
    CHECK(std::abs(lw.z0 - Complex{0.5}) < 1e-8);
    CHECK(lw.q.real() == doctest::Approx(1.2));
    CHECK(lw.max_modulus == doctest::Approx(0.625));
    CHECK(lw.holds());
  }
  SUBCASE("random polynomial maximizer") {
    const std::vector<Complex> w{0.0, 0.0, {1.0, -0.5}, {0.3, 0.8}, {-0.7, 0.1}, {0.2, 0.2}};
    const auto lw = lemma_witness(w, 2, 0.8);
    CHECK(std::abs(std::abs(lw.z0) - 0.8) < 1e-15);
    CHECK(lw.holds());
  }
  CHECK_THROWS_AS(lemma_witness(std::vector<Complex>{0.0, 0.0}, 1, 0.5), DomainError);
  CHECK_THROWS_AS(lemma_witness(std::vector<Complex>{0.0, 1.0}, 2, 0.5), DomainError);
  CHECK_THROWS_AS(lemma_witness(std::vector<Complex>{0.0, 1.0}, 1, 1.0), DomainError);
  CHECK_THROWS_AS(lemma_witness(std::vector<Complex>{0.0, 1.0}, 0, 0.5), DomainError);
}

TEST_CASE("every property suite passes") {
  for (const auto& name : property_suite_names()) {
    CAPTURE(name);
    const auto r = run_property_suite(name, 40, 2024);
    CHECK(r.failed == 0);
    CHECK(r.passed == 40);
    CHECK(r.first_counterexample.is_null());
  }
}

TEST_CASE("suite reports") {
  const auto a = run_property_suite("monotonicity", 25, 5);
  const auto b = run_property_suite("monotonicity", 25, 5);
  CHECK(a.to_json().dump() == b.to_json().dump());
  CHECK(a.to_json().at("schema") == "pvalent.report/1");
  CHECK(a.summary().find("25/25 passed") != std::string::npos);
  CHECK_THROWS_AS(run_property_suite("monotonicity", 0, 1), InvalidArgument);
  CHECK_THROWS_AS(run_property_suite("nope", 1, 1), InvalidArgument);
  CHECK(property_suite_names().size() >= 20);
}
