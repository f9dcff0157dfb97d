"""Bases: exact base size, random-base probabilities and the Q-hat bound.

A base is a set of points whose pointwise stabilizer is trivial and b(G)
is the least size of one.  Exact sizes come from iterative deepening over
point sequences, where each new point is taken up to the orbits of the
current stabilizer.  That loses nothing: if B is a base then so is B^g,
so the first point may be any orbit representative, and so on down.

Probabilities are over c-tuples drawn independently with repetition.
Q-hat(G, c) = sum over classes C of prime order of |C| fpr(C)^c bounds
the probability that a random c-tuple is not a base, so Q-hat < 1
certifies b(G) <= c.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from typing import Optional

import numpy as np

from .classes import class_table
from .config import get_config
from .errors import CapExceeded
from .fpr import fpr_report
from .permcore.actions import Action
from .permcore.group import PermGroup


def is_base(G: PermGroup, points) -> bool:
    return G.pointwise_stabilizer(tuple(points)).order() == 1


def _orbit_reps(S: PermGroup):
    """One point per nontrivial orbit, larger orbits first."""
    orbs = [o for o in S.orbits() if len(o) > 1]
    orbs.sort(key=lambda o: (-len(o), o[0]))
    return [(o[0], len(o)) for o in orbs]


def _greedy_base(G: PermGroup):
    S, base = G, []
    while S.order() > 1:
        a, _ = _orbit_reps(S)[0]
        base.append(a)
        S = S.point_stabilizer(a)
    return base


class _Budget(Exception):
    pass


def _search(S: PermGroup, r: int, chosen: list, nodes: list, budget: int):
    """A sequence of at most r more points killing S, or None."""
    nodes[0] += 1
    if nodes[0] > budget:
        raise _Budget
    order = S.order()
    if order == 1:
        return list(chosen)
    if r == 0:
        return None
    reps = _orbit_reps(S)
    # every later orbit is at most the largest current one
    if order > reps[0][1] ** r:
        return None
    for a, _ in reps:
        chosen.append(a)
        found = _search(S.point_stabilizer(a), r - 1, chosen, nodes, budget)
        chosen.pop()
        if found is not None:
            return found
    return None


def lower_bound(order: int, n: int) -> int:
    """Least c with n^c >= |G|, the integer form of log|G| / log n."""
    c = 0
    while n ** c < order:
        c += 1
    return c


@dataclass
class BaseSize:
    b: Optional[int]          # exact size, or None when only bounds are known
    lo: int
    hi: int
    witness: list             # a base of size hi (of size b when exact)
    nodes: int

    @property
    def exact(self):
        return self.b is not None


def base_size_exact(action: Action, budget=None, config=None) -> BaseSize:
    """Minimal base size by iterative deepening; bounds when the budget runs out."""
    config = config or get_config()
    budget = config.budget if budget is None else budget
    G = action.group
    n = action.degree
    if n > config.caps.degree:
        raise CapExceeded("degree", n, config.caps.degree)
    greedy = _greedy_base(G)
    lo = lower_bound(G.order(), n)
    hi, best = len(greedy), greedy
    nodes = [0]
    try:
        for c in range(lo, hi):
            found = _search(G, c, [], nodes, budget)
            if found is not None:
                hi, best = len(found), found
                break
            lo = c + 1
    except _Budget:
        return BaseSize(None, lo, hi, best, nodes[0])
    if not is_base(G, best):
        raise AssertionError("witness is not a base")
    return BaseSize(hi, hi, hi, best, nodes[0])


def is_minimal_witness(G: PermGroup, base) -> bool:
    """No subset one smaller is a base (checked exhaustively)."""
    return not any(is_base(G, s) for s in combinations(base, len(base) - 1))


# probabilities ------------------------------------------------------------------

def qhat(action: Action, c: int, report=None) -> Fraction:
    """sum over prime-order classes of |C| fpr(C)^c."""
    report = report or fpr_report(action)
    table = class_table(action.group)
    prime = set(table.prime_order_indices)
    return sum((r.size * r.fpr ** c for r in report.rows if r.index in prime), Fraction(0))


class _BaseOracle:
    """Memoized base test on sets of distinct points."""

    def __init__(self, G: PermGroup, cap):
        self.G = G
        self.memo = {}
        self.E = None
        if G.order() <= cap:
            E = np.asarray(G.elements_array(), dtype=np.int64)
            ident = np.arange(G.degree)
            self.E = E[~(E == ident).all(axis=1)]

    def __call__(self, points):
        key = tuple(sorted(set(points)))
        hit = self.memo.get(key)
        if hit is None:
            if self.E is not None:
                idx = list(key)
                hit = not (self.E[:, idx] == np.asarray(idx)).all(axis=1).any()
            else:
                hit = is_base(self.G, key)
            self.memo[key] = hit
        return hit


@dataclass
class BaseProb:
    c: int
    hits: int
    trials: int
    seed: int

    @property
    def estimate(self) -> Fraction:
        return Fraction(self.hits, self.trials)


def random_base_prob(action: Action, c: int, trials: int, seed=None, config=None) -> BaseProb:
    """Fraction of uniform random c-tuples (with repetition) that are bases."""
    if trials < 1:
        raise ValueError("trials must be positive")
    config = config or get_config()
    seed = config.seed if seed is None else seed
    rng = np.random.default_rng([seed, c, action.degree])
    oracle = _BaseOracle(action.group, config.caps.order)
    pts = rng.integers(0, action.degree, size=(trials, c))
    hits = sum(oracle(row.tolist()) for row in pts)
    return BaseProb(c, int(hits), trials, seed)


def base_prob_exhaustive(action: Action, c: int, config=None) -> Fraction:
    """Exact proportion of all n^c tuples that are bases."""
    config = config or get_config()
    n = action.degree
    oracle = _BaseOracle(action.group, config.caps.order)
    hits = sum(oracle(t) for t in product(range(n), repeat=c))
    return Fraction(hits, n ** c)


# bounds ---------------------------------------------------------------------------

@dataclass
class BoundsCheck:
    b: int
    mu: int
    degree: int
    order: int
    log_ratio: float            # log|G| / log n
    log2_order: float
    lower_ok: bool              # n^b >= |G|
    upper_ok: bool              # 2^b <= |G|
    coupling_ok: bool           # b * mu >= n

    @property
    def ok(self):
        return self.lower_ok and self.upper_ok and self.coupling_ok


def bounds_check(action: Action, b=None, mu=None) -> BoundsCheck:
    """log|G|/log n <= b <= log2|G| and b * mu >= n, compared in integers."""
    G = action.group
    n = action.degree
    order = G.order()
    if b is None:
        b = base_size_exact(action).b
    if mu is None:
        mu = fpr_report(action).mu
    # a group of degree 1 is trivial and every ratio is 0
    ratio = math.log(order) / math.log(n) if n > 1 else 0.0
    return BoundsCheck(b, mu, n, order, ratio, math.log2(order),
                       n ** b >= order, 2 ** b <= order, b * mu >= n)


@dataclass
class BaseReport:
    name: str
    b: Optional[int]
    lo: int
    hi: int
    witness: list
    qhat: dict = field(default_factory=dict)
    random_base_prob: dict = field(default_factory=dict)
    bounds: Optional[BoundsCheck] = None
    seed: int = field(default_factory=lambda: get_config().seed)


def base_report(action: Action, cs=(), trials=0, seed=None, budget=None) -> BaseReport:
    size = base_size_exact(action, budget)
    if not is_base(action.group, size.witness):
        raise AssertionError("witness is not a base")
    if size.exact and size.b > 0 and not is_minimal_witness(action.group, size.witness):
        raise AssertionError("witness is not minimal")
    rep = fpr_report(action)
    q = {c: qhat(action, c, rep) for c in cs}
    probs = {c: random_base_prob(action, c, trials, seed) for c in cs} if trials else {}
    bc = bounds_check(action, size.b, rep.mu) if size.exact else None
    return BaseReport(action.name, size.b, size.lo, size.hi, size.witness, q, probs, bc,
                      get_config().seed if seed is None else seed)
