#include <pybind11/complex.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pvalent/boundary.hpp"
#include "pvalent/errors.hpp"
#include "pvalent/harness.hpp"
#include "pvalent/neighborhood.hpp"
#include "pvalent/series.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace pvalent;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Operators and neighborhood criteria for truncated p-valent functions";

  auto& domain_error = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<AlignmentError>(m, "AlignmentError", domain_error.ptr());
  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<MultivalentFunction>(m, "MultivalentFunction")
      .def(py::init<int, int, std::vector<Complex>>(), "p"_a, "n"_a, "coeffs"_a = std::vector<Complex>{})
      .def_property_readonly("p", &MultivalentFunction::p)
      .def_property_readonly("n", &MultivalentFunction::n)
      .def_property_readonly("order", &MultivalentFunction::order)
      .def_property_readonly("coeffs", [](const MultivalentFunction& f) {
        return std::vector<Complex>(f.coeffs().begin(), f.coeffs().end());
      })
      .def("coeff", &MultivalentFunction::coeff, "k"_a)
      .def("with_order", &MultivalentFunction::with_order, "K"_a)
      .def(py::self == py::self)
      .def("__repr__", [](const MultivalentFunction& f) {
        return "MultivalentFunction(p=" + std::to_string(f.p()) + ", n=" + std::to_string(f.n()) +
               ", K=" + std::to_string(f.order()) + ")";
      });

  py::class_<OperatorParams>(m, "OperatorParams")
      .def(py::init([](double lambda, int m_, int omega) { return OperatorParams{lambda, m_, omega}; }),
           "lam"_a = 0.0, "m"_a = 0, "omega"_a = 0)
      .def_readwrite("lam", &OperatorParams::lambda)
      .def_readwrite("m", &OperatorParams::m)
      .def_readwrite("omega", &OperatorParams::omega);

  py::class_<TruncatedSeries>(m, "TruncatedSeries")
      .def_property_readonly("lead_exp", &TruncatedSeries::lead_exp)
      .def_property_readonly("lead_coeff", &TruncatedSeries::lead_coeff)
      .def_property_readonly("tail", [](const TruncatedSeries& s) {
        std::vector<std::pair<int, Complex>> out;
        for (const auto& t : s.tail()) out.emplace_back(t.exp, t.coeff);
        return out;
      })
      .def("dense_quotient", &TruncatedSeries::dense_quotient)
      .def("__call__", [](const TruncatedSeries& s, Complex z) { return evaluate(s, z); });

  py::class_<NeighborhoodParams>(m, "NeighborhoodParams")
      .def(py::init([](double a, double b, double d) { return NeighborhoodParams{a, b, d}; }), "alpha"_a,
           "beta"_a, "delta"_a)
      .def_readwrite("alpha", &NeighborhoodParams::alpha)
      .def_readwrite("beta", &NeighborhoodParams::beta)
      .def_readwrite("delta", &NeighborhoodParams::delta)
      .def("chord", &NeighborhoodParams::chord);

  py::enum_<Outcome>(m, "Outcome")
      .value("holds", Outcome::holds)
      .value("fails", Outcome::fails)
      .value("falsified", Outcome::falsified);

  py::class_<Verdict>(m, "Verdict")
      .def_readonly("outcome", &Verdict::outcome)
      .def_readonly("lhs", &Verdict::lhs)
      .def_readonly("threshold", &Verdict::threshold)
      .def_readonly("margin", &Verdict::margin)
      .def_readonly("between_m_bounds", &Verdict::between_m_bounds)
      .def_readonly("note", &Verdict::note)
      .def_property_readonly("holds", &Verdict::holds);

  py::class_<ArgAlignment>(m, "ArgAlignment")
      .def(py::init([](double phi, double tol) { return ArgAlignment{phi, tol}; }), "phi"_a,
           "tolerance"_a = kStandardTolerances.alignment);

  m.def("derivative_m", &derivative_m, "f"_a, "m"_a);
  m.def("salagean", &salagean, "s"_a, "omega"_a, "p"_a, "m"_a);
  m.def("apply_operator", &apply_operator, "f"_a, "op"_a);
  m.def("apply_operator_prime_normalized", &apply_operator_prime_normalized, "f"_a, "op"_a);
  m.def("operator_weight", &operator_weight, "k"_a, "p"_a, "op"_a);
  m.def("derivative_weight", &derivative_weight, "k"_a, "p"_a, "op"_a);

  m.def("threshold_N", &threshold_N, "delta"_a, "alpha"_a, "beta"_a, "p"_a, "m"_a);
  m.def("threshold_M", &threshold_M, "delta"_a, "alpha"_a, "beta"_a, "p"_a, "m"_a);
  m.def("sufficient_N", &sufficient_N, "f"_a, "g"_a, "op"_a, "nb"_a);
  m.def("sufficient_M", &sufficient_M, "f"_a, "g"_a, "op"_a, "nb"_a);
  m.def("sufficient_N_modulus", &sufficient_N_modulus, "f"_a, "g"_a, "op"_a, "nb"_a,
        "tolerance"_a = kStandardTolerances.alignment);
  m.def("sufficient_M_modulus", &sufficient_M_modulus, "f"_a, "g"_a, "op"_a, "nb"_a,
        "tolerance"_a = kStandardTolerances.alignment);
  m.def("membership_N", &membership_N, "f"_a, "g"_a, "op"_a, "nb"_a, "grid"_a = kStandardTolerances.grid);
  m.def("membership_M", &membership_M, "f"_a, "g"_a, "op"_a, "nb"_a, "grid"_a = kStandardTolerances.grid);
  m.def("necessary_N_bound", &necessary_N_bound, "f"_a, "g"_a, "op"_a, "nb"_a, "align"_a,
        "grid"_a = kStandardTolerances.grid);
  m.def("necessary_M_bound", &necessary_M_bound, "f"_a, "g"_a, "op"_a, "nb"_a, "align"_a,
        "grid"_a = kStandardTolerances.grid);
  m.def("construct_example_partner", &construct_example_partner, "g"_a, "op"_a, "nb"_a, "K"_a);
  m.def(
      "derivative_bound_implication",
      [](const MultivalentFunction& f, const MultivalentFunction& g, const OperatorParams& op,
         const NeighborhoodParams& nb, int grid) {
        const auto r = derivative_bound_implication(f, g, op, nb, grid);
        return py::make_tuple(r.hypothesis, r.conclusion);
      },
      "f"_a, "g"_a, "op"_a, "nb"_a, "grid"_a = kStandardTolerances.grid);

  m.def(
      "max_modulus_on_circle",
      [](const std::vector<Complex>& poly, double radius, int grid) {
        const auto r = max_modulus_on_circle(poly, radius, grid);
        return py::make_tuple(r.value, r.theta);
      },
      "poly"_a, "radius"_a = 1.0, "grid"_a = kStandardTolerances.grid);
  m.def(
      "sup_oracle", [](const std::vector<Complex>& poly, int grid) { return sup_oracle(poly, grid); },
      "poly"_a, "grid"_a);

  py::class_<LemmaWitness>(m, "LemmaWitness")
      .def_readonly("z0", &LemmaWitness::z0)
      .def_readonly("q", &LemmaWitness::q)
      .def_readonly("max_modulus", &LemmaWitness::max_modulus)
      .def_property_readonly("holds", &LemmaWitness::holds);
  m.def(
      "lemma_witness",
      [](const std::vector<Complex>& w, int order, double r0, int grid) {
        return lemma_witness(w, order, r0, grid);
      },
      "w_coeffs"_a, "order"_a, "r0"_a, "grid"_a = kStandardTolerances.grid);

  py::enum_<Target>(m, "Target")
      .value("inside_sufficient_N", Target::inside_sufficient_N)
      .value("inside_sufficient_M", Target::inside_sufficient_M)
      .value("unconstrained", Target::unconstrained);
  m.def(
      "generate_pair",
      [](int p, int n, int m_, int omega, double lambda, int K, std::uint64_t seed, Target target) {
        InstanceSpec spec{p, n, m_, omega, lambda, K, 1.0, seed};
        const auto r = generate_pair(spec, target);
        return py::make_tuple(r.f, r.g, r.nb);
      },
      "p"_a, "n"_a, "m"_a, "omega"_a, "lam"_a, "K"_a, "seed"_a, "target"_a = Target::inside_sufficient_N);

  m.def("property_suite_names", &property_suite_names);
  m.def(
      "run_property_suite",
      [](const std::string& suite, std::int64_t trials, std::uint64_t seed) {
        const auto r = run_property_suite(suite, trials, seed);
        py::dict d;
        d["suite"] = r.suite;
        d["trials"] = r.trials;
        d["seed"] = r.seed;
        d["passed"] = r.passed;
        d["failed"] = r.failed;
        d["report"] = r.to_json().dump();
        d["wall_seconds"] = r.wall_seconds;
        return d;
      },
      "suite"_a, "trials"_a, "seed"_a = 0);
}
