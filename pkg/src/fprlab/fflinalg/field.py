"""Finite fields GF(p^k) with table arithmetic, plus extensions for eigenvalues.

An element of GF(p^k) is an int 0 <= e < q whose base-p digits are the
coefficients of a polynomial in t (lowest degree first), reduced modulo a
fixed monic irreducible of degree k.  The modulus is the lexicographically
least monic irreducible, found by search and verified by trial division.
"""
from __future__ import annotations

import itertools
from functools import lru_cache

import numpy as np

from ..errors import UnsupportedGroup


def is_prime(n):
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def prime_power(q):
    """Return (p, k) with q = p^k, or raise."""
    for p in range(2, q + 1):
        if q % p == 0:
            k, r = 0, q
            while r % p == 0:
                r //= p
                k += 1
            if r != 1 or not is_prime(p):
                break
            return p, k
    raise UnsupportedGroup(f"{q} is not a prime power")


# polynomials over GF(p), lists of ints low degree first ------------------

def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod_prime(a, m, p):
    a = list(a)
    inv_lead = pow(m[-1], p - 2, p)
    dm = len(m) - 1
    while len(_trim(a)) - 1 >= dm:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for i, mc in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mc) % p
    return a


def _monics(p, d):
    """Monic polynomials of degree d over GF(p), in lexicographic order of
    their lower coefficients read from the constant term upward."""
    for low in itertools.product(range(p), repeat=d):
        yield list(low) + [1]


def is_irreducible_prime(f, p):
    """Trial division by every monic polynomial of degree 1..deg(f)//2."""
    d = len(f) - 1
    if d < 1:
        return False
    for e in range(1, d // 2 + 1):
        for g in _monics(p, e):
            if not _trim(_pmod_prime(f, g, p)):
                return False
    return True


@lru_cache(maxsize=None)
def least_irreducible(p, k):
    """Least monic irreducible of degree k over GF(p) (lexicographic search)."""
    if k == 1:
        return (0, 1)
    for f in _monics(p, k):
        if f[0] != 0 and is_irreducible_prime(f, p):
            return tuple(f)
    raise AssertionError("no irreducible found")  # pragma: no cover


class GF:
    """GF(q) with precomputed addition and multiplication tables."""

    def __init__(self, q):
        self.p, self.k = prime_power(q)
        self.q = q
        self.modulus = least_irreducible(self.p, self.k)
        p, k = self.p, self.k
        digits = np.array([[(e // p**i) % p for i in range(k)] for e in range(q)], dtype=np.int64)
        weights = p ** np.arange(k, dtype=np.int64)
        add = ((digits[:, None, :] + digits[None, :, :]) % p) @ weights
        self.add = add.astype(np.int64)
        mul = np.zeros((q, q), dtype=np.int64)
        polys = [list(map(int, row)) for row in digits]
        for a in range(q):
            for b in range(a, q):
                prod = [0] * (2 * k - 1)
                for i, x in enumerate(polys[a]):
                    if x:
                        for j, y in enumerate(polys[b]):
                            prod[i + j] = (prod[i + j] + x * y) % p
                r = _pmod_prime(prod, list(self.modulus), p) if k > 1 else [prod[0] % p]
                r = (r + [0] * k)[:k]
                mul[a, b] = mul[b, a] = sum(c * p**i for i, c in enumerate(r))
        self.mul = mul
        self.neg = np.array([int(np.nonzero(add[a] == 0)[0][0]) for a in range(q)], dtype=np.int64)
        self.sub = self.add[:, self.neg]
        inv = np.zeros(q, dtype=np.int64)
        for a in range(1, q):
            inv[a] = int(np.nonzero(mul[a] == 1)[0][0])
        self.inv = inv
        self.primitive = self._find_primitive()

    def _find_primitive(self):
        for a in range(1, self.q):
            if self.mult_order(a) == self.q - 1:
                return a
        raise AssertionError("multiplicative group is cyclic")  # pragma: no cover

    def mult_order(self, a):
        x, n = a, 1
        while x != 1:
            x = int(self.mul[x, a])
            n += 1
        return n

    def power(self, a, e):
        r = 1
        a = int(a)
        while e:
            if e & 1:
                r = int(self.mul[r, a])
            a = int(self.mul[a, a])
            e >>= 1
        return r

    def elements(self):
        return range(self.q)

    def from_int(self, c):
        """Image of the integer c under Z -> GF(q)."""
        c %= self.p
        return c  # digits: the constant term is the prime-field part

    def minus_one(self):
        return int(self.neg[1])

    def __repr__(self):
        return f"GF({self.q})"

    def __eq__(self, other):
        return isinstance(other, GF) and other.q == self.q

    def __hash__(self):
        return hash(("GF", self.q))


@lru_cache(maxsize=None)
def field(q) -> GF:
    return GF(q)


class ExtField:
    """GF(q)[t]/(f) for an irreducible f over GF(q); elements are tuples of
    base-field ints of length deg f.  Only used for small linear algebra."""

    def __init__(self, base: GF, f):
        self.base = base
        self.f = tuple(f)            # monic, low degree first
        self.d = len(f) - 1
        self.zero = (0,) * self.d
        self.one = (1,) + (0,) * (self.d - 1)

    def embed(self, a):
        return (int(a),) + (0,) * (self.d - 1)

    def gen(self):
        """The class of t, a root of f."""
        if self.d == 1:
            return (int(self.base.neg[self.f[0]]),)
        return (0, 1) + (0,) * (self.d - 2)

    def add(self, a, b):
        A = self.base.add
        return tuple(int(A[x, y]) for x, y in zip(a, b))

    def sub(self, a, b):
        S = self.base.sub
        return tuple(int(S[x, y]) for x, y in zip(a, b))

    def neg(self, a):
        return tuple(int(self.base.neg[x]) for x in a)

    def mul(self, a, b):
        F = self.base
        d = self.d
        prod = [0] * (2 * d - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] = int(F.add[prod[i + j], F.mul[x, y]])
        f = self.f
        for top in range(2 * d - 2, d - 1, -1):
            c = prod[top]
            if c:
                prod[top] = 0
                for i in range(d):
                    prod[top - d + i] = int(F.sub[prod[top - d + i], F.mul[c, f[i]]])
        return tuple(prod[:d])

    def power(self, a, e):
        r = self.one
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            e >>= 1
        return r

    def inv(self, a):
        if a == self.zero:
            raise ZeroDivisionError("inverse of zero")
        order = self.base.q ** self.d - 1
        return self.power(a, order - 1)

    def is_zero(self, a):
        return not any(a)
