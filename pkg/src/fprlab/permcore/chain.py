"""Stabilizer chains (base and strong generating sets).

Construction is the randomized Schreier-Sims algorithm driven by a seeded
product-replacement generator, followed by a deterministic Schreier
generator pass that completes the chain.  The verification pass is skipped
only when the caller supplies the true group order and the chain already
reaches it, in which case the chain is provably complete.

Everything here works on raw image tuples for speed; the public wrappers
live in :mod:`fprlab.permcore.group`.
"""
from __future__ import annotations

import math
import random

import numpy as np


def mul(p, q):
    return tuple(map(q.__getitem__, p))


def inv(p):
    r = [0] * len(p)
    for i, x in enumerate(p):
        r[x] = i
    return tuple(r)


def is_id(p):
    return all(i == x for i, x in enumerate(p))


class Level:
    """One level of the chain: base point, strong generators, transversal.

    ``trans[b]`` maps the base point to ``b``; ``tinv[b]`` is its inverse.
    """

    __slots__ = ("point", "gens", "trans", "tinv")

    def __init__(self, point, identity):
        self.point = point
        self.gens = []
        self.trans = {point: identity}
        self.tinv = {point: identity}

    def rebuild_orbit(self):
        point = self.point
        ident = self.trans[point]
        trans = {point: ident}
        queue = [point]
        gens = self.gens
        for b in queue:
            u = trans[b]
            for s in gens:
                c = s[b]
                if c not in trans:
                    trans[c] = mul(u, s)
                    queue.append(c)
        self.trans = trans
        self.tinv = {b: inv(u) for b, u in trans.items()}


class StabilizerChain:
    """Immutable once built; safe to share read-only."""

    def __init__(self, degree, levels):
        self.degree = degree
        self.levels = levels
        self.identity = tuple(range(degree))

    @property
    def base(self):
        return tuple(lv.point for lv in self.levels)

    def order(self):
        return math.prod(len(lv.trans) for lv in self.levels)

    def orbit_sizes(self):
        return tuple(len(lv.trans) for lv in self.levels)

    def sift(self, g, start=0):
        """Return (residue, level index where sifting stopped)."""
        levels = self.levels
        for i in range(start, len(levels)):
            lv = levels[i]
            b = g[lv.point]
            t = lv.tinv.get(b)
            if t is None:
                return g, i
            if b != lv.point:
                g = mul(g, t)
        return g, len(levels)

    def contains(self, g):
        if len(g) != self.degree:
            return False
        h, _ = self.sift(g)
        return is_id(h)

    def strong_generators(self, k=0):
        """Strong generators fixing the first k base points."""
        if k >= len(self.levels):
            return []
        return list(self.levels[k].gens)

    def random_element(self, rng):
        """Uniformly random element (product of random coset representatives)."""
        g = self.identity
        for lv in reversed(self.levels):
            u = lv.trans[rng.choice(list(lv.trans))] if len(lv.trans) > 1 else None
            if u is not None:
                g = mul(g, u)
        return g

    def elements_array(self, dtype=None):
        """Every element as rows of a numpy array, deepest level varying slowest."""
        n = self.degree
        if dtype is None:
            dtype = np.uint8 if n <= 256 else np.uint16 if n <= 65536 else np.uint32
        E = np.arange(n, dtype=dtype)[None, :]
        for lv in reversed(self.levels):
            if len(lv.trans) == 1:
                continue
            U = np.array(list(lv.trans.values()), dtype=dtype)
            # row e*u is u[e]
            E = U[:, E].reshape(-1, n)
        return E

    def elements(self):
        for row in self.elements_array():
            yield tuple(int(x) for x in row)


class _ChainBuilder:
    def __init__(self, degree, base_prefix):
        self.degree = degree
        self.identity = tuple(range(degree))
        self.levels = [Level(b, self.identity) for b in base_prefix]

    def order(self):
        return math.prod(len(lv.trans) for lv in self.levels)

    def sift(self, g, start=0):
        levels = self.levels
        for i in range(start, len(levels)):
            lv = levels[i]
            b = g[lv.point]
            t = lv.tinv.get(b)
            if t is None:
                return g, i
            if b != lv.point:
                g = mul(g, t)
        return g, len(levels)

    def add(self, h, j):
        """Add residue h (which fixes base points 0..j-1) as a strong generator."""
        if j == len(self.levels):
            point = next(i for i, x in enumerate(h) if i != x)
            self.levels.append(Level(point, self.identity))
        for i in range(j + 1):
            self.levels[i].gens.append(h)
            self.levels[i].rebuild_orbit()

    def complete(self):
        """Deterministic Schreier-Sims: sift every Schreier generator."""
        levels = self.levels
        i = len(levels) - 1
        checked = [set() for _ in levels]
        while i >= 0:
            lv = levels[i]
            restart = False
            done = checked[i]
            for b in list(lv.trans):
                u = lv.trans[b]
                for gi, s in enumerate(lv.gens):
                    key = (b, gi)
                    if key in done:
                        continue
                    c = s[b]
                    sg = mul(mul(u, s), lv.tinv[c])
                    h, j = self.sift(sg, i + 1)
                    if not is_id(h):
                        self.add(h, j)
                        while len(checked) < len(levels):
                            checked.append(set())
                        for k in range(j + 1):
                            checked[k].clear()
                        i = j
                        restart = True
                        break
                    done.add(key)
                if restart:
                    break
            if not restart:
                i -= 1

    def finish(self):
        return StabilizerChain(self.degree, self.levels)


def _product_replacement(gens, rng, pool_size=10, warmup=40):
    pool = list(gens)
    while len(pool) < pool_size:
        pool.append(pool[len(pool) % len(gens)])
    acc = tuple(range(len(gens[0])))
    state = {"pool": pool, "acc": acc}

    def step():
        pool = state["pool"]
        i, j = rng.sample(range(len(pool)), 2)
        if rng.random() < 0.5:
            pool[i] = mul(pool[i], pool[j])
        else:
            pool[i] = mul(pool[j], pool[i])
        state["acc"] = mul(state["acc"], pool[i])
        return state["acc"]

    for _ in range(warmup):
        step()
    return step


def build_chain(gens, degree, seed=1, base_prefix=(), known_order=None,
                patience=24):
    """Build a complete stabilizer chain for the group generated by ``gens``.

    ``gens`` are image tuples.  ``base_prefix`` fixes the first base points
    (levels are kept even when their orbit is trivial).  The result depends
    only on (gens, degree, seed, base_prefix).
    """
    builder = _ChainBuilder(degree, base_prefix)
    gens = [tuple(g) for g in gens if not is_id(g)]
    for g in gens:
        h, j = builder.sift(g)
        if not is_id(h):
            builder.add(h, j)
    if not gens:
        return builder.finish()
    if known_order is not None and builder.order() == known_order:
        return builder.finish()
    rng = random.Random(seed)
    step = _product_replacement(gens, rng)
    misses = 0
    while misses < patience:
        h, j = builder.sift(step())
        if is_id(h):
            misses += 1
            continue
        builder.add(h, j)
        misses = 0
        if known_order is not None and builder.order() == known_order:
            return builder.finish()
    builder.complete()
    return builder.finish()
