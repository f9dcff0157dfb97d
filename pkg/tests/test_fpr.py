import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from fprlab.classes import class_table
from fprlab.cli.spec import load
from fprlab.fflinalg import act_on, build_classical, field, matrix_of
from fprlab.fpr import (check_43q, fix_count, fpr_direct, fpr_fusion, fpr_report, fpr_vectors,
                        has_derangement, involution_fixity, minimal_degree)
from fprlab.genus import orbit_count_identity_check
from fprlab.permcore import ActionSpec, Permutation, coset_action, realize, symmetric

from strategies import perms, transitive_groups


def _natural(G):
    return realize(G, ActionSpec("natural"))


# examples ------------------------------------------------------------------------

def test_gl22_order_three_on_vectors():
    act = load("gl:2:2@vectors")
    rep = fpr_report(act)
    assert [r.fpr for r in rep.rows if r.order == 3] == [Fraction(1, 4)]


def test_three_cycle_on_pairs():
    for n in range(5, 11):
        act = load(f"sym:{n}@ksets:2")
        x = act.induce(Permutation.parse("(1,2,3)", n))
        assert fpr_direct(act, x) == Fraction((n - 3) * (n - 4), n * (n - 1))


@pytest.mark.parametrize("spec,mu", [
    ("sym:5", 2), ("sym:6", 2), ("sym:7", 2), ("alt:5", 3), ("alt:6", 3), ("alt:7", 3),
    ("sym:6@ksets:2", 8), ("wreath:sym:3:sym:2@product", 6),
])
def test_minimal_degree(spec, mu):
    assert minimal_degree(load(spec)) == mu


def test_alt5_on_d10_cosets():
    act = load("alt:5@cosets:(1,2,3,4,5),(2,5)(3,4)")
    rep = fpr_report(act)
    assert act.degree == 6
    assert rep.fpr_by_order() == {1: [1], 2: [Fraction(1, 3)], 3: [Fraction(0)],
                                  5: [Fraction(1, 6)]}
    assert rep.fixity == 2 and rep.mu == 4
    has, wit = has_derangement(act)
    assert has and wit.order == 3
    assert involution_fixity(act) == (2, True)


def test_odd_order_group_has_no_involutions():
    act = load("cyclic:5@regular")
    assert involution_fixity(act) == (0, False)


def test_transvection_fusion_in_sp62_minus_forms():
    act = load("sp:6:2@forms:minus")
    G = act.group
    H = G.point_stabilizer(0)
    table = class_table(G)
    C = next(c for c in table if c.order == 2 and c.size == 63)
    assert fpr_fusion(G, H, C) == Fraction(4, 7) == fpr_direct(act, C.rep)
    assert fix_count(act, C.rep) == 16


def test_43q_examples():
    ok = check_43q(load("gl:3:2"))
    assert ok.applicable and ok.passed and ok.bound == Fraction(2, 3)
    na = check_43q(load("psl:2:23"))
    assert not na.applicable and na.consistent
    s8 = check_43q(load("sym:8"), q=2, socle="PSL(4,2)")
    assert s8.max_fpr == Fraction(3, 4) and not s8.passed
    assert s8.listed_exception and s8.consistent
    bad = check_43q(load("sym:8"), q=2, socle="PSL(4,2)", exceptions=())
    assert not bad.consistent and bad.witnesses


# properties --------------------------------------------------------------------------

@given(transitive_groups(6), st.integers(0, 10**6))
def test_fpr_is_a_class_function(G, seed):
    rng = random.Random(seed)
    act = _natural(G)
    x, g = G.random_element(rng), G.random_element(rng)
    assert fpr_direct(act, x) == fpr_direct(act, x.conjugate(g))


@given(transitive_groups(7), st.integers(0, 10**6), st.integers(1, 12))
def test_fpr_grows_under_powers(G, seed, m):
    act = _natural(G)
    x = G.random_element(random.Random(seed))
    assert fpr_direct(act, x) <= fpr_direct(act, x ** m)


@given(transitive_groups(6))
def test_direct_and_fusion_routes_agree(G):
    act = _natural(G)
    H = G.point_stabilizer(0)
    for C in class_table(G):
        assert fpr_direct(act, C.rep) == fpr_fusion(G, H, C, method="sift")
        assert fpr_fusion(G, H, C, method="sift") == fpr_fusion(G, H, C, method="classes")


@given(transitive_groups(5))
def test_coset_action_reproduces_fprs(G):
    # the action on cosets of a point stabilizer is the natural action again
    act = coset_action(G, G.point_stabilizer(0))
    a = sorted(r.fpr for r in fpr_report(_natural(G)).rows)
    b = sorted(r.fpr for r in fpr_report(act).rows)
    assert a == b


@given(transitive_groups(7), st.integers(0, 10**6))
def test_burnside_orbit_count(G, seed):
    act = _natural(G)
    assert orbit_count_identity_check(act, G.random_element(random.Random(seed)))


@given(perms(8))
def test_burnside_for_single_permutations(p):
    act = _natural(symmetric(8))
    assert orbit_count_identity_check(act, p)


@given(transitive_groups(7))
def test_transitive_groups_have_derangements(G):
    has, wit = has_derangement(_natural(G))
    assert has == (G.degree > 1)
    if has:
        assert wit.fix == 0


@pytest.mark.parametrize("kind,n,q", [("gl", 2, 3), ("gl", 3, 2), ("gl", 2, 4), ("sl", 2, 5)])
def test_vectors_route_agrees_with_counting(kind, n, q):
    G = build_classical(kind, n, q)
    act = act_on(G, ActionSpec("vectors"))
    F = field(q)
    for C in class_table(act.group):
        M = matrix_of(act, C.rep)
        assert fpr_vectors(F, M) == fpr_direct(act, C.rep)
