"""Constructors for the standard permutation groups used across the corpus."""
from __future__ import annotations

import math

from .group import PermGroup
from .perm import Permutation


def symmetric(n):
    if n == 1:
        return PermGroup([], 1, order=1, name="Sym(1)")
    gens = [Permutation.from_cycles([(0, 1)], n)]
    if n > 2:
        gens.append(Permutation.from_cycles([tuple(range(n))], n))
    return PermGroup(gens, n, order=math.factorial(n), name=f"Sym({n})")


def alternating(n):
    """Alt(n) = <(1,2,3), (1,...,n)> for n odd and <(1,2,3), (2,...,n)> for n even."""
    if n < 3:
        return PermGroup([], n, order=1, name=f"Alt({n})")
    gens = [Permutation.from_cycles([(0, 1, 2)], n)]
    if n > 3:
        long = tuple(range(n)) if n % 2 else tuple(range(1, n))
        gens.append(Permutation.from_cycles([long], n))
    return PermGroup(gens, n, order=math.factorial(n) // 2, name=f"Alt({n})")


def cyclic(n):
    if n == 1:
        return PermGroup([], 1, order=1, name="C1")
    return PermGroup([Permutation.from_cycles([tuple(range(n))], n)], n, order=n,
                     name=f"C{n}")


def dihedral(order):
    """Dihedral group of the given order 2m acting on m points."""
    if order % 2 or order < 2:
        raise ValueError("dihedral order must be even and positive")
    m = order // 2
    if m == 1:
        return PermGroup([Permutation((1, 0))], 2, order=2, name="D2")
    if m == 2:
        gens = [Permutation((1, 0, 3, 2)), Permutation((2, 3, 0, 1))]
        return PermGroup(gens, 4, order=4, name="D4")
    rot = Permutation(tuple((i + 1) % m for i in range(m)))
    ref = Permutation(tuple((-i) % m for i in range(m)))
    return PermGroup([rot, ref], m, order=order, name=f"D{order}")


class WreathProduct:
    """L wr K for permutation groups L (degree m) and K (degree r).

    ``natural()`` is the imprimitive action on r copies of L's domain; the
    product action on L's domain to the power r is built by the action layer.
    """

    def __init__(self, inner: PermGroup, outer: PermGroup):
        self.inner = inner
        self.outer = outer
        self.name = f"({inner.name or 'L'}) wr ({outer.name or 'K'})"

    def order(self):
        return self.inner.order() ** self.outer.degree * self.outer.order()

    def natural(self):
        m, r = self.inner.degree, self.outer.degree
        gens = []
        for g in self.inner.generators:
            if g.is_identity():
                continue
            gens.append(Permutation(tuple(g[x] if x < m else x for x in range(m * r))))
        for k in self.outer.generators:
            if k.is_identity():
                continue
            gens.append(Permutation(tuple(k[x // m] * m + x % m for x in range(m * r))))
        return PermGroup(gens, m * r, order=self.order(), name=self.name)

    def product_action(self):
        m, r = self.inner.degree, self.outer.degree
        n = m**r

        def digits(x):
            return [(x // m**i) % m for i in range(r)]

        def number(ds):
            return sum(d * m**i for i, d in enumerate(ds))

        gens = []
        for g in self.inner.generators:
            if g.is_identity():
                continue
            img = []
            for x in range(n):
                ds = digits(x)
                ds[0] = g[ds[0]]
                img.append(number(ds))
            gens.append(Permutation(tuple(img)))
        for k in self.outer.generators:
            if k.is_identity():
                continue
            img = []
            for x in range(n):
                ds = digits(x)
                out = [0] * r
                for i, d in enumerate(ds):
                    out[k[i]] = d
                img.append(number(out))
            gens.append(Permutation(tuple(img)))
        return PermGroup(gens, n, order=self.order(), name=self.name + " product action")
