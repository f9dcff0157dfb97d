"""Exact spread and uniform spread by set cover, plus the fpr certificate.

With N'(x) = {y != 1 : <x, y> != G}, a k-tuple x_1..x_k has no common mate
exactly when the sets N'(x_i) cover every non-identity element.  So
s(G) + 1 is the least number of such sets covering all vertices, and for a
class C the least number covering C gives the uniform version.  Repeated
entries in a tuple add nothing to a cover, so sets suffice.

Any cover can be conjugated so that one of its sets belongs to a class
representative, which restricts the first choice; after that the search
branches on the uncovered element with the fewest covering sets.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

import numpy as np

from ..classes import class_table, fusion_count
from ..config import get_config
from ..errors import CapExceeded
from ..permcore.group import PermGroup
from ..permcore.perm import Permutation
from ..permcore.subgroups import maximal_overgroups
from .table import GroupTable


class _Budget(Exception):
    pass


def _bits(mask):
    return int.from_bytes(np.packbits(mask, bitorder="little").tobytes(), "little")


def _min_cover(universe, sets, first_choices, budget):
    """Least number of sets covering ``universe`` (int bitset).

    ``sets`` maps a label to its bitset; the first set is drawn from
    ``first_choices``.  Returns (size, labels) or (None, None) when no cover
    exists at all.
    """
    union = 0
    for s in sets.values():
        union |= s
    if universe & ~union:
        return None, None
    if not universe:
        return 0, []
    labels = list(sets)
    containing = {}
    for lab in labels:
        s = sets[lab] & universe
        while s:
            low = s & -s
            containing.setdefault(low.bit_length() - 1, []).append(lab)
            s ^= low
    nodes = [0]

    def search(uncovered, depth, chosen):
        nodes[0] += 1
        if nodes[0] > budget:
            raise _Budget
        if not uncovered:
            return list(chosen)
        if depth == 0:
            return None
        if depth == 1:
            # one set must contain everything left
            low = uncovered & -uncovered
            for lab in containing[low.bit_length() - 1]:
                if not uncovered & ~sets[lab]:
                    return chosen + [lab]
            return None
        best_e, best_opts = None, None
        s = uncovered
        while s:
            low = s & -s
            e = low.bit_length() - 1
            opts = containing[e]
            if best_opts is None or len(opts) < len(best_opts):
                best_e, best_opts = e, opts
            s ^= low
        for lab in best_opts:
            r = search(uncovered & ~sets[lab], depth - 1, chosen + [lab])
            if r is not None:
                return r
        return None

    for k in range(1, len(labels) + 1):
        for lab in first_choices:
            r = search(universe & ~sets[lab], k - 1, [lab])
            if r is not None:
                return k, r
    return None, None  # pragma: no cover - union check above guarantees a cover


@dataclass
class SpreadCert:
    s: Optional[int]            # None means infinite (no cover: G is cyclic)
    u: Optional[int]
    witness_class: Optional[int]            # class index achieving u
    spread_witness: list = field(default_factory=list)    # (s+1)-tuple with no mate
    uniform_witnesses: dict = field(default_factory=dict)  # class -> tuple with no mate in it
    per_class_cover: dict = field(default_factory=dict)
    method: str = "set-cover exact"


def spread_exact(G: PermGroup, config=None, budget=None) -> SpreadCert:
    config = config or get_config()
    budget = config.budget if budget is None else budget
    if G.order() > config.caps.spread:
        raise CapExceeded("group order for exact spread", G.order(), config.caps.spread)
    GT = GroupTable(G, cap=config.caps.spread, config=config)
    N = GT.N
    verts = np.array([i for i in range(N) if i != GT.identity])
    nonid = np.zeros(N, dtype=bool)
    nonid[verts] = True
    # N'(x) for reps, transported by conjugation
    sets = {}
    for c, rep in enumerate(GT.rep_index):
        if rep == GT.identity:
            continue
        non = np.nonzero(~GT.neighbours(rep) & nonid)[0]
        for z, g in GT.conjugators(c).items():
            mask = np.zeros(N, dtype=bool)
            mask[GT.conjugate(non, g)] = True
            sets[int(z)] = _bits(mask)
    reps = [r for r in GT.rep_index if r != GT.identity]
    universe = _bits(nonid)
    try:
        k, cover = _min_cover(universe, sets, reps, budget)
    except _Budget:
        raise CapExceeded("set-cover node budget", budget, budget) from None
    s = None if k is None else k - 1
    u_best, u_class = None, None
    per_class, uwit = {}, {}
    for c in range(len(GT.table)):
        if GT.rep_index[c] == GT.identity:
            continue
        members = GT.class_members(c)
        mask = np.zeros(N, dtype=bool)
        mask[members] = True
        cu = _bits(mask)
        try:
            kc, cov = _min_cover(cu, sets, reps, budget)
        except _Budget:
            raise CapExceeded("set-cover node budget", budget, budget) from None
        per_class[c] = kc
        if kc is None:
            u_best, u_class = None, c
            uwit[c] = []
            break
        uwit[c] = [GT.element(i) for i in cov]
        if u_class is None or (u_best is not None and kc - 1 > u_best):
            u_best, u_class = kc - 1, c
    return SpreadCert(s, u_best, u_class,
                      [GT.element(i) for i in cover] if cover else [], uwit, per_class)


# fpr-based certificate -------------------------------------------------------

@dataclass
class UspreadCertificate:
    y: Permutation
    k: int
    overgroup_orders: list
    overgroups_source: str          # "computed" or "supplied"
    rows: list                      # per prime-order class: (rep, order, [fpr per overgroup], sum)
    max_sum: Fraction
    issued: bool

    @property
    def trust_note(self):
        if self.overgroups_source == "supplied":
            return "conditional on supplied overgroups"
        return "overgroups computed by exhaustive subgroup search"


def uspread_certify(G: PermGroup, y: Permutation, k: int, overgroups=None, config=None):
    """Certify u(G) >= k when sum over H in M(y) of fpr(x, G/H) < 1/k for
    every element x of prime order.

    M(y) is computed when ``overgroups`` is None; supplied lists are used
    as given and the certificate records that it depends on them.
    """
    config = config or get_config()
    source = "supplied" if overgroups is not None else "computed"
    M = (maximal_overgroups(G, y, config=config) if overgroups is None
         else maximal_overgroups(G, y, candidates=overgroups, config=config))
    table = class_table(G, config)
    rows = []
    worst = Fraction(0)
    for i in table.prime_order_indices:
        C = table[i]
        parts = [Fraction(fusion_count(G, H, C, config=config), C.size) for H in M]
        total = sum(parts, Fraction(0))
        worst = max(worst, total)
        rows.append((C.rep, C.order, parts, total))
    issued = worst < Fraction(1, k)
    return UspreadCertificate(y, k, [H.order() for H in M], source, rows, worst, issued)
