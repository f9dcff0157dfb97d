"""Univariate polynomials over GF(q): lists of field ints, lowest degree first.

Factoring into irreducibles is Cantor-Zassenhaus (squarefree split, distinct
degree, then randomized equal degree with a seeded RNG).  The zero
polynomial is the empty list.
"""
from __future__ import annotations

import itertools
import random

from .field import GF


def trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def deg(a):
    return len(a) - 1


def add(F: GF, a, b):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return trim(int(F.add[x, y]) for x, y in zip(a, b))


def sub(F: GF, a, b):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return trim(int(F.sub[x, y]) for x, y in zip(a, b))


def scale(F: GF, a, c):
    return trim(int(F.mul[c, x]) for x in a)


def mul(F: GF, a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    A, M = F.add, F.mul
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = int(A[out[i + j], M[x, y]])
    return trim(out)


def divmod_(F: GF, a, b):
    b = trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = trim(a)
    inv_lead = int(F.inv[b[-1]])
    q = [0] * max(len(a) - len(b) + 1, 0)
    r = list(a)
    db = len(b) - 1
    while len(r) - 1 >= db and r:
        c = int(F.mul[r[-1], inv_lead])
        shift = len(r) - 1 - db
        q[shift] = c
        for i, bc in enumerate(b):
            r[shift + i] = int(F.sub[r[shift + i], F.mul[c, bc]])
        r = trim(r)
    return trim(q), r


def mod(F, a, b):
    return divmod_(F, a, b)[1]


def monic(F: GF, a):
    a = trim(a)
    if not a:
        return a
    return scale(F, a, int(F.inv[a[-1]]))


def gcd(F: GF, a, b):
    a, b = trim(a), trim(b)
    while b:
        a, b = b, mod(F, a, b)
    return monic(F, a)


def powmod(F: GF, a, e, m):
    result = [1]
    a = mod(F, a, m)
    while e:
        if e & 1:
            result = mod(F, mul(F, result, a), m)
        a = mod(F, mul(F, a, a), m)
        e >>= 1
    return result


def derivative(F: GF, a):
    out = []
    for i in range(1, len(a)):
        c = 0
        for _ in range(i % F.p):
            c = int(F.add[c, a[i]])
        out.append(c)
    return trim(out)


def evaluate(F: GF, a, x):
    r = 0
    for c in reversed(a):
        r = int(F.add[F.mul[r, x], c])
    return r


X = [0, 1]


def is_irreducible(F: GF, f):
    """Ben-Or test: gcd(x^(q^i) - x, f) = 1 for every i <= deg f / 2."""
    f = monic(F, f)
    n = deg(f)
    if n < 1:
        return False
    h = X
    for _ in range(n // 2):
        h = powmod(F, h, F.q, f)
        if deg(gcd(F, sub(F, h, X), f)) > 0:
            return False
    return True


def _pth_root(F: GF, a):
    """a is a polynomial in x^p; return b with b^p = a."""
    root_exp = F.q // F.p   # x -> x^(q/p) inverts Frobenius on GF(q)
    return trim(F.power(a[i], root_exp) for i in range(0, len(a), F.p))


def squarefree_parts(F: GF, f):
    """Distinct squarefree factors whose product is the radical of f."""
    f = monic(F, f)
    if deg(f) < 1:
        return []
    d = derivative(F, f)
    if not d:
        return squarefree_parts(F, _pth_root(F, f))
    g = gcd(F, f, d)
    radical_part = divmod_(F, f, g)[0]
    out = [monic(F, radical_part)]
    if deg(g) > 0:
        out.extend(squarefree_parts(F, g))
    return out


def distinct_degree(F: GF, f):
    """Split a squarefree monic f into (product of degree-d factors, d)."""
    out = []
    h = X
    d = 0
    f = list(f)
    while deg(f) >= 2 * (d + 1):
        d += 1
        h = powmod(F, h, F.q, f)
        g = gcd(F, sub(F, h, X), f)
        if deg(g) > 0:
            out.append((g, d))
            f = divmod_(F, f, g)[0]
            h = mod(F, h, f)
    if deg(f) > 0:
        out.append((monic(F, f), deg(f)))
    return out


def equal_degree(F: GF, f, d, rng):
    """Cantor-Zassenhaus split of f (product of degree-d irreducibles)."""
    n = deg(f)
    if n == d:
        return [monic(F, f)]
    while True:
        a = trim([rng.randrange(F.q) for _ in range(n)])
        if deg(a) < 1:
            continue
        if F.p == 2:
            # trace map from GF(q^d) down to GF(2)
            t = a
            s = a
            for _ in range(F.k * d - 1):
                t = powmod(F, t, 2, f)
                s = add(F, s, t)
            b = s
        else:
            b = sub(F, powmod(F, a, (F.q**d - 1) // 2, f), [1])
        g = gcd(F, b, f)
        if 0 < deg(g) < n:
            return (equal_degree(F, g, d, rng)
                    + equal_degree(F, divmod_(F, f, g)[0], d, rng))


def irreducible_factors(F: GF, f, seed=0):
    """Distinct monic irreducible factors of f, sorted by (degree, coefficients)."""
    rng = random.Random(seed)
    found = set()
    for part in squarefree_parts(F, f):
        for g, d in distinct_degree(F, part):
            for h in equal_degree(F, g, d, rng):
                found.add(tuple(h))
    return sorted((list(h) for h in found), key=lambda h: (len(h), h[::-1]))


def least_irreducible_over(F: GF, d):
    """Lexicographically least monic irreducible of degree d over GF(q)."""
    for low in itertools.product(range(F.q), repeat=d):
        if low[0] == 0:
            continue
        f = list(low) + [1]
        if is_irreducible(F, f):
            return f
    raise AssertionError("no irreducible polynomial")  # pragma: no cover
