from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from ncdegree.estimate import (
    InstanceConfig,
    PeelBudgetExceeded,
    campaign,
    check_hypotheses,
    degree_bound,
    expand_Q,
    peel_decomposition,
    pipeline_trace,
    random_instance,
    sharpness_instance,
    summarize,
    swap_variables,
    verify_instance,
    witness_monomial,
)
from ncdegree.fields import GF, QQ
from ncdegree.freealg import NcPoly
from ncdegree.mnseries import GroupSeries
from ncdegree.parsing import parse_poly as pp


def test_hypothesis_examples():
    h = check_hypotheses(pp("x^2"), pp("x^3 + y"))
    assert h.all_satisfied and (h.m, h.n) == (2, 3)
    assert not check_hypotheses(pp("x^2"), pp("x^4 + y")).divisibility_ok
    assert not check_hypotheses(pp("x"), pp("y")).leading_dependent
    h = check_hypotheses(pp("x^2 + x"), pp("x^3"))
    assert h.leading_dependent and not h.independent and not h.all_satisfied
    assert not check_hypotheses(pp("3"), pp("x")).f_nonconstant


def test_degree_bound_examples():
    assert degree_bound(pp("[x,y]"), pp("x^2"), pp("x^3+y")) == 3
    assert degree_bound(pp("x"), pp("x^2"), pp("x^3+y")) == Fraction(6, 5)
    for k, n, m in [(1, 2, 3), (2, 5, 3), (3, 4, 2)]:
        P, f, g = sharpness_instance(n, m, k)
        assert degree_bound(P, f, g) == k * (n + 1)
    with pytest.raises(ValueError):
        degree_bound(pp("x"), pp("x^2"), pp("x^3"))
    with pytest.raises(ValueError):
        degree_bound(pp("1"), pp("x"), pp("y"))


def test_verify_examples():
    f, g = pp("x^2"), pp("x^3 + y")
    r = verify_instance(pp("[x,y]"), f, g)
    assert (r.lhs_degree, r.bound, r.slack, r.holds) == (3, 3, 0, True)
    F = GF(2)
    r = verify_instance(pp("[x,y]", field=F), pp("x^2", field=F), pp("x^3+y", field=F))
    assert (r.lhs_degree, r.bound, r.holds) == (3, 3, True)
    r = verify_instance(pp("x*y"), f, g)
    assert (r.lhs_degree, r.weighted_N, r.slack) == (5, 5, 2)
    with pytest.raises(ValueError):
        verify_instance(pp("7"), f, g)


def test_report_schema():
    P, f, g = pp("[x,y]"), pp("x^2"), pp("x^3+y")
    d = verify_instance(P, f, g).to_dict(P, f, g, QQ)
    assert list(d)[:13] == ["f", "g", "P", "field", "m", "n", "N", "comm_deg", "bound", "lhs", "slack",
                            "holds", "hypotheses"]
    assert d["bound"] == "3/1" and d["slack"] == "0/1"


def test_bound_fails_without_divisibility_hypothesis():
    f, g = pp("x^2"), pp("x^4 + y")
    r = verify_instance(pp("y - x^2"), f, g)
    assert not r.hypothesis.all_satisfied and not r.holds


def test_peel_examples():
    coeffs, s, steps = peel_decomposition(pp("x^3 + x^2 + x*y"), (0,))
    assert coeffs == {3: 1, 2: 1} and s == pp("x*y") and steps == 2
    assert peel_decomposition(pp("x*y"), (0,)) == ({}, pp("x*y"), 0)
    coeffs, s, steps = peel_decomposition(pp("x^5"), (0,))
    assert coeffs == {5: 1} and s.is_zero()
    with pytest.raises(ValueError):
        peel_decomposition(pp("x"), (0, 0))
    with pytest.raises(PeelBudgetExceeded) as info:
        peel_decomposition(pp("x^3 + x^2 + x + 1"), (0,), max_steps=2)
    assert info.value.coefficients == {3: 1, 2: 1}


def test_peel_series():
    g = GroupSeries.from_poly(pp("x^4 - x^2 + y*x"), 0)
    coeffs, s, steps = peel_decomposition(g, (0,))
    assert coeffs == {4: 1, 2: -1} and s.leading()[0] == ((1, 1), (0, 1))


def test_expand_Q_examples():
    t, s = NcPoly.var(0), NcPoly.var(1)
    assert expand_Q(pp("x*y - y*x"), 2, 3) == t ** 2 * s - s * t ** 2
    assert expand_Q(pp("x"), 4, 5) == t ** 4
    assert expand_Q(pp("y^2"), 2, 3) == t ** 6 + t ** 3 * s + s * t ** 3 + s * s


def test_witness_examples():
    w = witness_monomial(pp("x*y - y*x"), 2, 3)
    assert w.z == (0, 1) and w.u == (0, 0, 1) and w.deg_s == 1 == w.q and w.u_coefficient == 1
    w = witness_monomial(pp("x"), 2, 3)
    assert w.u == (0, 0) and w.deg_s == 0
    w = witness_monomial(pp("y"), 2, 3)
    assert w.special_case and w.u == (0, 0, 0) and w.deg_s == 0


def test_witness_preconditions():
    with pytest.raises(ValueError):
        witness_monomial(pp("x + y"), 2, 3)
    with pytest.raises(ValueError):
        witness_monomial(NcPoly.zero(), 2, 3)
    with pytest.raises(ValueError):
        witness_monomial(pp("x"), 3, 2)
    with pytest.raises(ValueError):
        witness_monomial(pp("x"), 2, 4)


def test_pipeline_example():
    t = pipeline_trace(pp("[x,y]"), pp("x^2"), pp("x^3+y"))
    assert t.complete and t.conjugator.terms == {(): 1}
    assert t.root == (0,) and t.s.terms == {((1, 1),): 1}
    assert t.chain() == (3, 3, 3, 3)
    assert all(t.checks.values())


def test_pipeline_swaps_roles():
    t = pipeline_trace(pp("x*y"), pp("x^3+y"), pp("x^2"))
    assert t.swapped and (t.m, t.n) == (2, 3) and t.complete


def test_pipeline_sharpness_family():
    for n, m, k in [(2, 3, 1), (2, 5, 2), (3, 4, 2), (2, 3, 3)]:
        t = pipeline_trace(*sharpness_instance(n, m, k))
        assert t.complete and t.lhs == t.R_degree_formal == t.u_degree == t.bound == k * (n + 1)


def test_pipeline_truncation_insufficient_is_reported():
    # centralizing x^3 + y needs an infinite conjugator
    t = pipeline_trace(*sharpness_instance(4, 3, 1))
    assert t.status == "truncation-insufficient" and "centralize" in t.detail
    assert t.lhs == t.bound


def test_pipeline_requires_hypotheses():
    with pytest.raises(ValueError):
        pipeline_trace(pp("x"), pp("x^2"), pp("x^4+y"))


def test_swap_variables():
    assert swap_variables(pp("x^2*y")) == pp("y^2*x")


def test_random_instance_is_deterministic_and_valid():
    a = random_instance(seed=0)
    assert a == random_instance(seed=0)
    assert check_hypotheses(a[1], a[2]).all_satisfied
    assert random_instance(seed=1) != a


def test_random_instance_infeasible_config():
    from ncdegree.estimate import InstanceGenerationError
    with pytest.raises(InstanceGenerationError):
        random_instance(InstanceConfig(exponent_max=2), seed=0)


def test_campaign_summary():
    reports = [r for *_, r in campaign(40, seed=3)]
    s = summarize(reports)
    assert s["count"] == 40 and s["failures"] == 0


@settings(max_examples=60)
@given(st.integers(0, 10**6), st.sampled_from([QQ, GF(2), GF(3), GF(5)]))
def test_soundness_property(seed, F):
    P, f, g = random_instance(InstanceConfig(field=F), seed)
    r = verify_instance(P, f, g)
    assert r.hypothesis.all_satisfied and r.holds
    assert r.bound.denominator in [d for d in range(1, r.hypothesis.m + r.hypothesis.n + 1)
                                   if (r.hypothesis.m + r.hypothesis.n) % d == 0]


@settings(max_examples=40)
@given(st.integers(0, 10**6))
def test_independent_leading_exactness_property(seed):
    P, f, g = random_instance(seed=seed, leading="independent")
    r = verify_instance(P, f, g)
    assert r.leading_exact and r.lhs_degree == r.weighted_N


@settings(max_examples=25)
@given(st.integers(0, 10**6))
def test_completed_pipeline_chain_property(seed):
    P, f, g = random_instance(seed=seed)
    t = pipeline_trace(P, f, g, budget_centralize=15)
    if t.complete:
        assert all(t.checks.values()), t.checks
        lhs, R, u, bound = t.chain()
        assert lhs >= R >= u >= bound
