"""Permutation groups given by generators."""
from __future__ import annotations

import math
from functools import cached_property

import numpy as np

from ..config import get_config
from ..errors import CapExceeded, DegreeMismatch, NotTransitive
from . import chain as _chain
from .perm import Permutation, split_generators


class PermGroup:
    """A permutation group of fixed degree with a lazily built stabilizer chain.

    ``order`` may be passed when it is known in advance (named groups); the
    chain construction then stops as soon as it is reached, which is sound
    because a partial chain can never overshoot the true order.
    """

    def __init__(self, generators, degree=None, *, order=None, name=None, seed=None):
        gens = [g if isinstance(g, Permutation) else Permutation(g) for g in generators]
        if degree is None:
            if not gens:
                raise ValueError("degree is required when there are no generators")
            degree = gens[0].degree
        for g in gens:
            if g.degree != degree:
                raise DegreeMismatch(f"generator {g} has degree {g.degree}, expected {degree}")
        if not gens:
            gens = [Permutation.identity(degree)]
        self.generators = tuple(gens)
        self.degree = degree
        self.name = name
        self._known_order = order
        self._seed = seed

    @classmethod
    def from_cycles(cls, degree, gens_text, **kw):
        gens = [Permutation.parse(t, degree) for t in split_generators(gens_text)]
        return cls(gens, degree, **kw)

    def __repr__(self):
        label = self.name or f"<{', '.join(g.to_cycles() for g in self.generators)}>"
        return f"PermGroup({label}, degree={self.degree})"

    @property
    def seed(self):
        return self._seed if self._seed is not None else get_config().seed

    @cached_property
    def chain(self) -> _chain.StabilizerChain:
        return _chain.build_chain([g.images for g in self.generators], self.degree,
                                  seed=self.seed, known_order=self._known_order)

    def build_chain(self, seed=None, base_prefix=()):
        """Fresh chain; deterministic in (generators, seed, base_prefix)."""
        return _chain.build_chain([g.images for g in self.generators], self.degree,
                                  seed=self.seed if seed is None else seed,
                                  base_prefix=tuple(base_prefix),
                                  known_order=self.order())

    def order(self) -> int:
        return self.chain.order()

    def identity(self):
        return Permutation.identity(self.degree)

    def is_trivial(self):
        return all(g.is_identity() for g in self.generators)

    def contains(self, p) -> bool:
        if isinstance(p, Permutation):
            if p.degree != self.degree:
                raise DegreeMismatch(f"element degree {p.degree} != group degree {self.degree}")
            p = p.images
        return self.chain.contains(tuple(p))

    __contains__ = contains

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        return all(other.contains(g) for g in self.generators)

    def random_element(self, rng) -> Permutation:
        return Permutation._raw(self.chain.random_element(rng))

    def elements(self, cap=None):
        """All elements, sorted by image tuple.  Refuses groups above ``cap``."""
        cap = get_config().caps.order if cap is None else cap
        if self.order() > cap:
            raise CapExceeded("group order", self.order(), cap)
        rows = sorted(self.chain.elements())
        return [Permutation._raw(r) for r in rows]

    def elements_array(self):
        return self.chain.elements_array()

    # orbits ---------------------------------------------------------------

    def orbit(self, alpha):
        seen = {alpha}
        queue = [alpha]
        imgs = [g.images for g in self.generators]
        for a in queue:
            for s in imgs:
                b = s[a]
                if b not in seen:
                    seen.add(b)
                    queue.append(b)
        return seen

    def orbits(self):
        """Orbits as sorted lists, ordered by least point."""
        left = set(range(self.degree))
        out = []
        for a in range(self.degree):
            if a in left:
                orb = self.orbit(a)
                left -= orb
                out.append(sorted(orb))
        return out

    def is_transitive(self):
        return len(self.orbit(0)) == self.degree

    # stabilizers ----------------------------------------------------------

    def pointwise_stabilizer(self, points):
        points = tuple(points)
        if not points:
            return self
        ch = self.build_chain(base_prefix=points)
        gens = ch.strong_generators(len(points))
        order = math.prod(len(lv.trans) for lv in ch.levels[len(points):])
        return PermGroup([Permutation._raw(g) for g in gens], self.degree, order=order)

    def point_stabilizer(self, alpha):
        return self.pointwise_stabilizer((alpha,))

    def setwise_orbit_sizes(self, alpha):
        """Orbit sizes of the stabilizer of ``alpha``."""
        return sorted(len(o) for o in self.point_stabilizer(alpha).orbits())

    # blocks ---------------------------------------------------------------

    def minimal_block(self, a, b):
        """Finest block system in which a and b share a block (as a partition)."""
        n = self.degree
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        imgs = [g.images for g in self.generators]
        pairs = [(a, b)]
        parent[find(b)] = find(a)
        while pairs:
            x, y = pairs.pop()
            for s in imgs:
                u, v = find(s[x]), find(s[y])
                if u != v:
                    parent[v] = u
                    pairs.append((s[x], s[y]))
        blocks = {}
        for x in range(n):
            blocks.setdefault(find(x), []).append(x)
        return sorted(blocks.values())

    def is_primitive(self):
        if not self.is_transitive():
            raise NotTransitive("primitivity is only defined for transitive groups")
        n = self.degree
        if n <= 2:
            return True
        stab = self.point_stabilizer(0)
        for orb in stab.orbits():
            b = orb[0]
            if b == 0:
                continue
            if len(self.minimal_block(0, b)) > 1:
                return False
        return True

    def block_system(self):
        """A nontrivial block system if one exists, else None."""
        if not self.is_transitive():
            raise NotTransitive("block systems need a transitive group")
        stab = self.point_stabilizer(0)
        for orb in stab.orbits():
            b = orb[0]
            if b == 0:
                continue
            blocks = self.minimal_block(0, b)
            if len(blocks) > 1:
                return blocks
        return None

    # misc -----------------------------------------------------------------

    def subgroup(self, gens, **kw):
        return PermGroup(gens, self.degree, **kw)

    def closure_order(self, cap=None):
        """Order by explicit closure under the generators (brute-force oracle)."""
        cap = get_config().caps.order if cap is None else cap
        ident = tuple(range(self.degree))
        seen = {ident}
        queue = [ident]
        imgs = [g.images for g in self.generators]
        for e in queue:
            for s in imgs:
                f = _chain.mul(e, s)
                if f not in seen:
                    seen.add(f)
                    if len(seen) > cap:
                        raise CapExceeded("closure size", len(seen), cap)
                    queue.append(f)
        return len(seen)

    def element_orders(self):
        return sorted({p.order() for p in self.elements()})


def element_index(rows: np.ndarray):
    """Dictionary from row bytes to row number, for exact element lookup."""
    rows = np.ascontiguousarray(rows)
    return {rows[i].tobytes(): i for i in range(rows.shape[0])}
