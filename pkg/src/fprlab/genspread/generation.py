"""Two-element generation and the probability P(G, 2)."""
from __future__ import annotations

from fractions import Fraction

from ..config import get_config
from ..errors import CapExceeded, MembershipError
from ..permcore import chain as _chain
from ..permcore.group import PermGroup
from ..permcore.perm import Permutation
from .table import GroupTable


def generates(G: PermGroup, x: Permutation, y: Permutation, seed=None) -> bool:
    """Whether <x, y> = G, by the order of the subgroup's stabilizer chain."""
    for z in (x, y):
        if not G.contains(z):
            raise MembershipError(f"{z} is not in the group")
    seed = get_config().seed if seed is None else seed
    target = G.order()
    ch = _chain.build_chain([x.images, y.images], G.degree, seed=seed, known_order=target)
    return ch.order() == target


def neighbourhood_sizes(GT: GroupTable):
    """|{y : <rep, y> = G}| for every class representative."""
    return [int(GT.neighbours(r).sum()) for r in GT.rep_index]


def prob_gen2(G: PermGroup, estimate=False, samples=20000, config=None):
    """P(G, 2) exactly, as sum over classes of |C| |N(rep)| / |G|^2.

    Past the pair-enumeration cap, ``estimate=True`` returns a seeded Monte
    Carlo estimate (a Fraction of hits over samples) instead of raising.
    """
    config = config or get_config()
    N = G.order()
    if N <= config.caps.graph:
        GT = GroupTable(G, config=config)
        total = sum(c.size * k for c, k in zip(GT.table, neighbourhood_sizes(GT)))
        return Fraction(total, N * N)
    if not estimate:
        raise CapExceeded("group order for exact P(G,2)", N, config.caps.graph)
    rng = config.substream("pgen2")
    hits = sum(generates(G, G.random_element(rng), G.random_element(rng))
               for _ in range(samples))
    return Fraction(hits, samples)


def prob_gen2_bruteforce(G: PermGroup, cap=400):
    """Every ordered pair tested with the chain-based generation test."""
    elems = G.elements(cap=cap)
    hits = sum(generates(G, x, y) for x in elems for y in elems)
    return Fraction(hits, len(elems) ** 2)
