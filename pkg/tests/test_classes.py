import math
from collections import Counter

import pytest
from hypothesis import given, strategies as st

from fprlab.classes import (class_of, class_table, element_order_counts, fusion_count)
from fprlab.config import get_config, using
from fprlab.errors import MembershipError
from fprlab.permcore import PermGroup, Permutation, alternating, symmetric

from strategies import small_groups


def brute_classes(G):
    elems = G.elements()
    seen, out = set(), []
    for x in elems:
        if x in seen:
            continue
        cls = {x.conjugate(g) for g in elems}
        seen |= cls
        out.append(cls)
    return out


def test_alt5_class_sizes():
    t = class_table(alternating(5))
    assert sorted(t.sizes()) == [1, 12, 12, 15, 20]
    assert [c.order for c in t] == sorted(c.order for c in t)


def test_sym6_has_eleven_classes():
    t = class_table(symmetric(6))
    assert len(t) == 11
    assert sum(t.sizes()) == 720


def test_class_of_rejects_outsiders():
    with pytest.raises(MembershipError):
        class_of(alternating(5), Permutation.parse("(1,2)", 5))


def test_sampled_route_matches_enumeration():
    G = symmetric(7)
    full = class_table(PermGroup(G.generators, 7))
    cfg = get_config().with_caps(full_enumeration=100)
    with using(cfg):
        sampled = class_table(PermGroup(G.generators, 7), cfg)
    assert sampled.method == "sampled" and full.method == "enumerated"
    assert [(c.rep, c.size) for c in sampled] == [(c.rep, c.size) for c in full]


def test_fusion_methods_agree_on_a5_d10():
    A5 = alternating(5)
    H = A5.subgroup([Permutation.parse("(1,2,3,4,5)", 5), Permutation.parse("(2,5)(3,4)", 5)])
    for C in class_table(A5):
        a = fusion_count(A5, H, C, method="sift")
        b = fusion_count(A5, H, C, method="classes")
        assert a == b
    counts = {C.order: fusion_count(A5, H, C) for C in class_table(A5) if C.order in (2, 3)}
    assert counts == {2: 5, 3: 0}


@given(small_groups(5))
def test_classes_partition_the_group(G):
    t = class_table(G)
    assert sum(t.sizes()) == G.order()
    for c in t:
        assert c.size * c.centralizer_order == G.order()
    brute = brute_classes(G)
    assert sorted(len(c) for c in brute) == sorted(t.sizes())
    for cls in brute:
        assert len({t.index_of(x) for x in cls}) == 1


@given(small_groups(5), st.integers(1, 7))
def test_power_map_sends_classes_to_classes(G, m):
    t = class_table(G)
    pm = t.power_map(m)
    for i, c in enumerate(t):
        assert t.index_of(c.rep ** m) == pm[i]
        assert t[pm[i]].order == c.order // math.gcd(c.order, m)


@given(small_groups(5))
def test_element_order_counts(G):
    counts = element_order_counts(class_table(G))
    assert counts == dict(sorted(Counter(x.order() for x in G.elements()).items()))
