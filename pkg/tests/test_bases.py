from fractions import Fraction

import pytest
from hypothesis import given, settings

from fprlab.bases import (base_prob_exhaustive, base_report, base_size_exact, bounds_check,
                          is_base, is_minimal_witness, lower_bound, qhat, random_base_prob)
from fprlab.cli.spec import load
from fprlab.permcore import ActionSpec, realize

from strategies import transitive_groups


@pytest.mark.parametrize("n", range(3, 9))
def test_symmetric_and_alternating(n):
    assert base_size_exact(load(f"sym:{n}")).b == n - 1
    assert base_size_exact(load(f"alt:{n}")).b == n - 2


@pytest.mark.parametrize("spec,b", [
    ("gl:2:3@vectors", 2), ("pgl:3:3", 4), ("alt:5@cosets:(1,2,3,4,5),(2,5)(3,4)", 3),
    ("cyclic:6@regular", 1), ("psl:2:23", 3),
])
def test_examples(spec, b):
    r = base_size_exact(load(spec))
    assert r.exact and r.b == b
    assert is_base(load(spec).group, r.witness)


def test_lower_bound():
    assert lower_bound(120, 5) == 3
    assert lower_bound(1, 5) == 0
    assert lower_bound(25, 5) == 2


def test_budget_exhaustion_gives_bounds():
    r = base_size_exact(load("sym:7"), budget=1)
    assert not r.exact and r.lo <= 6 <= r.hi
    assert is_base(load("sym:7").group, r.witness)


def test_qhat_alt5_d10():
    act = load("alt:5@cosets:(1,2,3,4,5),(2,5)(3,4)")
    assert qhat(act, 2) == Fraction(7, 3)
    assert qhat(act, 3) == Fraction(2, 3)
    assert base_size_exact(act).b == 3


def test_sym5_base_probabilities():
    act = load("sym:5")
    assert base_prob_exhaustive(act, 4) == Fraction(24, 125)
    assert base_prob_exhaustive(act, 3) == 0
    p = random_base_prob(act, 4, 10000, seed=1)
    assert p.estimate == Fraction(1915, 10000)
    assert random_base_prob(act, 4, 10000, seed=1) == p
    assert random_base_prob(act, 3, 2000, seed=1).hits == 0


def test_base_report():
    rep = base_report(load("alt:6"), cs=(4, 5), trials=500, seed=3)
    assert rep.b == 4 and rep.bounds.ok
    assert set(rep.qhat) == {4, 5} and rep.random_base_prob[5].trials == 500


def test_degree_one_bounds():
    bc = bounds_check(load("sym:1"), b=0, mu=0)
    assert bc.log_ratio == 0.0 and bc.lower_ok and bc.upper_ok


# properties -------------------------------------------------------------------------

@settings(max_examples=30)
@given(transitive_groups(7))
def test_sandwich_and_minimal_degree_coupling(G):
    act = realize(G, ActionSpec("natural"))
    bc = bounds_check(act)
    assert bc.lower_ok and bc.upper_ok      # log|G| / log n <= b <= log2 |G|
    assert bc.coupling_ok                   # b * mu >= n


@settings(max_examples=30)
@given(transitive_groups(6))
def test_witness_is_minimal_base(G):
    act = realize(G, ActionSpec("natural"))
    r = base_size_exact(act)
    assert is_base(G, r.witness) and len(r.witness) == r.b
    if r.b:
        assert is_minimal_witness(G, r.witness)


@settings(max_examples=25)
@given(transitive_groups(5))
def test_qhat_bounds_failure_probability(G):
    act = realize(G, ActionSpec("natural"))
    b = base_size_exact(act).b
    for c in range(1, 4):
        q = qhat(act, c)
        assert 1 - base_prob_exhaustive(act, c) <= q
        if q < 1:
            assert b <= c
