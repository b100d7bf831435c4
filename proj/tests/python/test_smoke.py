import math

import pytest

import pvalent as pv


def test_operator_weight_example():
    op = pv.OperatorParams(lam=0.5, m=1, omega=1)
    assert pv.operator_weight(1, 2, op) == pytest.approx(9.0)
    assert pv.derivative_weight(1, 2, op) == pytest.approx(18.0)
    F = pv.apply_operator(pv.MultivalentFunction(2, 1, [1.0]), op)
    assert F.lead_exp == 1
    assert F.tail == [(2, pytest.approx(9.0))]


def test_derivative_and_evaluate():
    s = pv.derivative_m(pv.MultivalentFunction(2, 1, [1j]), 1)
    assert s.lead_coeff == 2
    assert s.tail[0][1] == pytest.approx(3j)
    assert s(0.5) == pytest.approx(2 * 0.5 + 3j * 0.25)


def test_thresholds_and_criteria():
    assert pv.threshold_N(2.0, 0.0, math.pi / 2, 1, 0) == pytest.approx(2 - math.sqrt(2))
    f = pv.MultivalentFunction(1, 1, [1.1])
    g = pv.MultivalentFunction(1, 1, [1.0])
    nb = pv.NeighborhoodParams(0.0, 0.0, 0.25)
    v = pv.sufficient_N(f, g, pv.OperatorParams(), nb)
    assert v.holds and v.outcome == pv.Outcome.holds
    assert v.lhs == pytest.approx(0.2)
    assert pv.membership_N(f, g, pv.OperatorParams(), nb).holds


def test_errors_map_to_python():
    with pytest.raises(pv.DomainError):
        pv.derivative_m(pv.MultivalentFunction(2, 1), 2)
    with pytest.raises(ValueError):
        pv.run_property_suite("no_such_suite", 1)


def test_partner_and_generator():
    g = pv.MultivalentFunction(2, 1, [0.01, 0.02j])
    op = pv.OperatorParams(lam=0.3, m=1, omega=1)
    nb = pv.NeighborhoodParams(0.2, 0.9, 5.0)
    f = pv.construct_example_partner(g, op, nb, 20)
    T = 2 * nb.chord()
    expected = 2 * (nb.delta - T) * (1 / 2 - 1 / 22)
    assert pv.sufficient_N(f, g, op, nb).lhs == pytest.approx(expected, rel=1e-9)

    f1, g1, nb1 = pv.generate_pair(3, 1, 1, 2, 0.5, 6, seed=17)
    f2, g2, _ = pv.generate_pair(3, 1, 1, 2, 0.5, 6, seed=17)
    assert f1 == f2 and g1 == g2
    assert pv.sufficient_N(f1, g1, pv.OperatorParams(0.5, 1, 2), nb1).holds


def test_boundary_and_lemma():
    value, theta = pv.max_modulus_on_circle([1.0, 1.0])
    assert value == pytest.approx(2.0)
    assert pv.sup_oracle([0, 0, 1], 64) == pytest.approx(1.0)
    w = pv.lemma_witness([0, 1, 0.5], 1, 0.5)
    assert w.holds and w.q.real == pytest.approx(1.2)


def test_suite_report_is_deterministic():
    a = pv.run_property_suite("thm_2_1_implication", 20, 7)
    b = pv.run_property_suite("thm_2_1_implication", 20, 7)
    assert a["failed"] == 0 and a["passed"] == 20
    assert a["report"] == b["report"]
    assert "thm_2_1_implication" in pv.property_suite_names()


def test_alignment_error_is_a_domain_error():
    assert issubclass(pv.AlignmentError, pv.DomainError)
    f = pv.MultivalentFunction(2, 1, [1.0, 1j])
    g = pv.MultivalentFunction(2, 1, [1.0, 1.0])
    with pytest.raises(pv.AlignmentError):
        pv.sufficient_N_modulus(f, g, pv.OperatorParams(), pv.NeighborhoodParams(0, 0, 10))
