"""Acceptance criteria 1 to 13, each with its time limit.

Every test prints one ``PASS criterion N`` or ``FAIL criterion N`` line;
the lines are collected again in the terminal summary.
"""
import random
import time
from contextlib import contextmanager
from fractions import Fraction

import numpy as np
import pytest

from fprlab.bases import base_size_exact, bounds_check, qhat
from fprlab.classes import class_of, class_table, fusion_count
from fprlab.cli.spec import load
from fprlab.config import get_config, using
from fprlab.fflinalg import fixed_space_dim, matrix_of
from fprlab.fpr import check_43q, fpr_direct, fpr_fusion, fpr_report
from fprlab.genspread import (build_graph, chromatic_number, graph_stats, prob_gen2,
                              spread_exact, uspread_certify)
from fprlab.genus import genus_of, genus_screen, ind, min_index_table, orbit_count_identity_check
from fprlab.permcore import Permutation, maximal_overgroups

from test_genus import alt_tuple, cyclic_tuple, sym_tuple

RESULTS = []
D10 = "alt:5@cosets:(1,2,3,4,5),(2,5)(3,4)"


@contextmanager
def criterion(n, limit, label):
    t0 = time.perf_counter()
    ok = False
    try:
        yield
        ok = True
    finally:
        dt = time.perf_counter() - t0
        passed = ok and dt < limit
        line = f"{'PASS' if passed else 'FAIL'} criterion {n}: {label} ({dt:.2f}s, limit {limit}s)"
        RESULTS.append(line)
        print(line)
    assert dt < limit, f"criterion {n} took {dt:.1f}s, limit {limit}s"


def test_criterion_01_three_cycle_on_pairs():
    with criterion(1, 1, "Sym(n) on 2-sets, 3-cycle fpr by two routes"):
        for n in range(5, 11):
            act = load(f"sym:{n}@ksets:2")
            G = act.group
            x = act.induce(Permutation.parse("(1,2,3)", n))
            want = Fraction((n - 3) * (n - 4), n * (n - 1))
            assert fpr_direct(act, x) == want
            assert fpr_fusion(G, G.point_stabilizer(0), class_of(G, x)) == want


def test_criterion_02_pgl_reflection():
    with criterion(2, 5, "PGL(n,q) reflection on projective points"):
        for n, q in [(3, 3), (3, 5), (4, 3)]:
            act = load(f"pgl:{n}:{q}")
            M = np.eye(n, dtype=np.int64)
            M[0, 0] = q - 1
            assert fpr_direct(act, act.induce(M)) == Fraction(q ** (n - 1) + q - 2, q**n - 1)


def test_criterion_03_vectors():
    with criterion(3, 5, "GL(2,3), GL(3,2) on vectors: fpr = q^(d-n)"):
        for n, q in [(2, 3), (3, 2)]:
            act = load(f"gl:{n}:{q}@vectors")
            F = act.source.field
            for C in class_table(act.group):
                d = fixed_space_dim(F, matrix_of(act, C.rep))
                assert fpr_direct(act, C.rep) == Fraction(q) ** (d - n)


def test_criterion_04_sp62_transvections():
    with criterion(4, 60, "Sp6(2) on 28 points, transvection class"):
        act = load("sp:6:2@forms:minus")
        G = act.group
        assert act.degree == 28
        C = next(c for c in class_table(G) if c.order == 2 and c.size == 63)
        assert fusion_count(G, G.point_stabilizer(0), C) == 36
        assert C.rep.num_fixed() == 16
        assert fpr_direct(act, C.rep) == Fraction(4, 7)


def test_criterion_05_alt5_on_d10_cosets():
    with criterion(5, 10, "Alt(5) on cosets of D10: fprs, certificate, s = u = 2"):
        act = load(D10)
        fprs = {o: v for o, v in fpr_report(act).fpr_by_order().items() if o > 1}
        assert fprs == {2: [Fraction(1, 3)], 3: [Fraction(0)], 5: [Fraction(1, 6)]}
        G = load("alt:5").group
        assert uspread_certify(G, Permutation.parse("(1,2,3,4,5)", 5), 2).issued
        cert = spread_exact(G)
        assert (cert.s, cert.u) == (2, 2)


def test_criterion_06_alt5_generating_graph():
    with criterion(6, 60, "generating graph of Alt(5), chromatic number 9"):
        g = build_graph(load("alt:5").group)
        st = graph_stats(g)
        assert (st.vertices, st.edges) == (59, 1140)
        assert st.coclique.value >= 15
        invol = [i for i in st.coclique.witness if g.table.element(i).order() == 2]
        assert len(invol) >= 15
        assert st.clique.value == 8
        assert st.connected and st.diameter == 2
        assert chromatic_number(g.bitsets(), get_config().budget,
                                lower=st.clique.value) == (9, True)


SIMPLE_UP_TO_2000 = ["alt:5", "psl:2:7", "alt:6", "psl:2:8", "psl:2:11", "psl:2:13"]


def test_criterion_07_pgen2():
    with criterion(7, 60, "P(Alt(6),2) = 53/90 and the minimum over simple groups"):
        values = {s: prob_gen2(load(s).group) for s in SIMPLE_UP_TO_2000}
        assert values["alt:6"] == Fraction(53, 90)
        assert min(values.values()) == Fraction(53, 90)


def test_criterion_08_alt8_uniform_spread():
    cfg = get_config().with_caps(order=30000)
    with criterion(8, 120, "Alt(8), y of shape [3,5]: one overgroup, u >= 3"):
        with using(cfg):
            G = load("alt:8").group
            y = Permutation.parse("(1,2,3)(4,5,6,7,8)", 8)
            M = maximal_overgroups(G, y, config=cfg)
            assert [H.order() for H in M] == [360]
            cert = uspread_certify(G, y, 3, config=cfg)
            assert cert.issued and cert.max_sum < Fraction(1, 3)
            assert all(total < Fraction(1, 3) for _, _, _, total in cert.rows)


def test_criterion_09_psl_2_23_genus_screen():
    with criterion(9, 60, "PSL(2,23) degree 24: index table and empty screen"):
        act = load("psl:2:23")
        assert act.degree == 24
        assert min_index_table(act) == {2: 12, 3: 16, 4: 18, 6: 20, 11: 20, 12: 22, 23: 22}
        assert genus_screen(act, 0, insoluble=True).survivors == []


def test_criterion_10_genus_zero_witnesses_and_parity():
    with criterion(10, 30, "genus-zero tuples and parity on 10^4 random tuples"):
        for n in range(2, 13):
            assert genus_of(cyclic_tuple(n), load(f"cyclic:{n}@regular")) == 0
        for n in range(3, 8):
            assert genus_of(sym_tuple(n), load(f"sym:{n}")) == 0
            assert genus_of(alt_tuple(n), load(f"alt:{n}")) == 0
        rng = np.random.default_rng(2024)
        for _ in range(10**4):
            n = int(rng.integers(2, 10))
            k = int(rng.integers(1, 6))
            xs = [Permutation(tuple(int(a) for a in rng.permutation(n))) for _ in range(k)]
            prod = xs[0]
            for x in xs[1:]:
                prod = prod * x
            assert (sum(ind(x) for x in xs) + ind(~prod)) % 2 == 0


def test_criterion_11_base_sizes():
    with criterion(11, 60, "base sizes of Sym(n), Alt(n), GL(2,3), PGL(3,3)"):
        for n in range(3, 9):
            assert base_size_exact(load(f"sym:{n}")).b == n - 1
            assert base_size_exact(load(f"alt:{n}")).b == n - 2
        assert base_size_exact(load("gl:2:3@vectors")).b == 2
        assert base_size_exact(load("pgl:3:3")).b == 4


def test_criterion_12_qhat():
    with criterion(12, 5, "Q-hat for Alt(5) on D10 cosets"):
        act = load(D10)
        assert qhat(act, 2) == Fraction(7, 3)
        assert qhat(act, 3) == Fraction(2, 3)
        assert base_size_exact(act).b == 3


# criterion 13 ----------------------------------------------------------------------

PERM_CORPUS = [
    "sym:5", "sym:6", "sym:7", "alt:5", "alt:6", "alt:7", "alt:8", "sym:6@ksets:2",
    "sym:7@ksets:3", "alt:6@tuples:2", D10, "dihedral:14", "cyclic:9@regular",
    "wreath:sym:3:sym:2@product", "wreath:sym:3:sym:3", "psl:2:23", "gl:3:2",
]
LIE_CORPUS = [
    "pgl:3:3", "pgl:3:5", "psl:2:23", "sp:4:3", "sp:6:2@forms:minus", "sp:6:2@forms:plus",
    "gl:4:2@subspaces:2", "gl:4:2", "sp:4:2", "sl:3:4", "psl:3:4", "sp:4:4", "gl:3:2",
    "sp:6:2", "pgl:2:9",
]
SPREAD_CORPUS = ["alt:5", "sym:4", "psl:2:7", "dihedral:10", "alt:4", "cyclic:6@regular"]


def _properties(spec, rng):
    act = load(spec)
    G = act.group
    n = act.degree
    for a in range(0, n, max(1, n // 4)):
        assert len(G.orbit(a)) * G.point_stabilizer(a).order() == G.order()
    for C in class_table(G):
        f = fpr_direct(act, C.rep)
        g = G.random_element(rng)
        assert fpr_direct(act, C.rep.conjugate(g)) == f
        for m in range(2, C.order + 1):
            assert f <= fpr_direct(act, C.rep ** m)
        assert orbit_count_identity_check(act, C.rep)
    if G.order() <= 10**5:
        bc = bounds_check(act)
        assert bc.lower_ok and bc.upper_ok and bc.coupling_ok


def test_criterion_13_property_suites():
    with criterion(13, 300, "invariants on the corpus and the 4/(3q) bound"):
        rng = random.Random(13)
        for spec in PERM_CORPUS:
            _properties(spec, rng)
        for spec in SPREAD_CORPUS:
            cert = spread_exact(load(spec).group)
            inf = float("inf")
            assert (inf if cert.u is None else cert.u) <= (inf if cert.s is None else cert.s)
        checked = 0
        for spec in LIE_CORPUS:
            c = check_43q(load(spec))
            assert c.consistent, f"{spec}: max fpr {c.max_fpr} > {c.bound}"
            checked += c.applicable
        assert checked >= 10


def test_criterion_summary_lines():
    # runs last in this module; the lines themselves are the report
    assert all(line.startswith("PASS") for line in RESULTS)
