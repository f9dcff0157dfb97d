"""Generators for GL, SL, Sp and their projective images.

Conventions (row vectors, v -> v g):

* SL(n, q) is generated by the elementary transvections I + c E(i, i+1) and
  I + c E(i+1, i) with c running over the GF(p)-basis 1, w, ..., w^(k-1),
  w a primitive element; these generate every root subgroup.
* GL(n, q) adds diag(w, 1, ..., 1).
* Sp(2m, q) preserves B(u, v) = u J v^T with J = [[0, I], [-I, 0]] on the
  basis e_1..e_m, f_1..f_m, and is generated by symplectic transvections
  u -> u + c B(u, v) v along a fixed small set of vectors v.

Projective kinds carry the same matrices; actions on points or subspaces
quotient by scalars automatically.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from ..config import get_config
from ..errors import CapExceeded, UnsupportedGroup
from . import matrix as Mx
from .field import GF, field as gf

KINDS = ("gl", "sl", "pgl", "psl", "sp")


def order_gl(n, q):
    return math.prod(q**n - q**i for i in range(n))


def order_sl(n, q):
    return order_gl(n, q) // (q - 1)


def order_pgl(n, q):
    return order_gl(n, q) // (q - 1)


def order_psl(n, q):
    return order_sl(n, q) // math.gcd(n, q - 1)


def order_sp(n, q):
    m = n // 2
    return q**(m * m) * math.prod(q**(2 * i) - 1 for i in range(1, m + 1))


def order_psp(n, q):
    return order_sp(n, q) // math.gcd(2, q - 1)


@dataclass
class MatrixGroup:
    field: GF
    n: int
    generators: list
    kind: str                       # gl, sl, pgl, psl, sp, user
    order: Optional[int] = None     # order of the matrix group itself
    name: str = ""
    meta: dict = field(default_factory=dict)

    @property
    def q(self):
        return self.field.q

    @property
    def projective(self):
        return self.kind in ("pgl", "psl")

    def projective_order(self):
        """Order of the image in PGL(n, q), when known."""
        q, n = self.q, self.n
        return {"gl": order_pgl(n, q), "pgl": order_pgl(n, q), "sl": order_psl(n, q),
                "psl": order_psl(n, q), "sp": order_psp(n, q)}.get(self.kind)

    def form(self):
        """Gram matrix of the preserved alternating form (Sp only)."""
        if self.kind != "sp":
            return None
        return symplectic_gram(self.field, self.n)

    def __repr__(self):
        return f"MatrixGroup({self.name})"


def symplectic_gram(F: GF, n):
    m = n // 2
    J = np.zeros((n, n), dtype=np.int64)
    for i in range(m):
        J[i, m + i] = 1
        J[m + i, i] = int(F.neg[1])
    return J


def transvection(F: GF, n, i, j, c):
    M = Mx.identity(F, n)
    M[i, j] = c
    return M


def symplectic_transvection(F: GF, J, v, c):
    """Matrix of u -> u + c B(u, v) v, i.e. I + c (J v^T) v."""
    n = J.shape[0]
    Jv = Mx.act_rows(F, J, np.asarray(v, dtype=np.int64)[:, None])[:, 0]
    T = Mx.identity(F, n)
    for r in range(n):
        coeff = int(F.mul[c, Jv[r]])
        if coeff:
            T[r] = F.add[T[r], F.mul[coeff, np.asarray(v, dtype=np.int64)]]
    return T


def _basis_scalars(F: GF):
    w = F.primitive
    return [F.power(w, j) for j in range(F.k)]


def _sl_generators(F: GF, n):
    gens = []
    for c in _basis_scalars(F):
        for i in range(n - 1):
            gens.append(transvection(F, n, i, i + 1, c))
            gens.append(transvection(F, n, i + 1, i, c))
    return gens


def _sp_vectors(n):
    """e_i, f_i and e_i + e_(i+1): enough for every root subgroup type."""
    m = n // 2
    vecs = []
    for i in range(n):
        v = [0] * n
        v[i] = 1
        vecs.append(v)
    for i in range(m - 1):
        v = [0] * n
        v[i] = v[i + 1] = 1
        vecs.append(v)
    return vecs


def build_classical(kind, n, q, config=None) -> MatrixGroup:
    """GL/SL/PGL/PSL(n, q) or Sp(n, q) with its known order attached.

    The order is confirmed when an action is realized: the permutation
    chain must reach the formula value.
    """
    config = config or get_config()
    kind = kind.lower()
    if kind not in KINDS:
        raise UnsupportedGroup(f"unknown classical kind {kind!r}")
    if q > config.caps.field_size:
        raise CapExceeded("field size", q, config.caps.field_size)
    if n > config.caps.dimension:
        raise CapExceeded("dimension", n, config.caps.dimension)
    if n < 1:
        raise UnsupportedGroup("dimension must be positive")
    F = gf(q)
    if kind in ("gl", "pgl"):
        gens = _sl_generators(F, n)
        d = Mx.identity(F, n)
        d[0, 0] = F.primitive
        gens.append(d)
        order = order_gl(n, q)
    elif kind in ("sl", "psl"):
        if n < 2:
            raise UnsupportedGroup("SL needs dimension at least 2")
        gens = _sl_generators(F, n)
        order = order_sl(n, q)
    else:
        if n % 2 or n < 2:
            raise UnsupportedGroup("Sp needs even dimension")
        J = symplectic_gram(F, n)
        gens = [symplectic_transvection(F, J, v, c)
                for v in _sp_vectors(n) for c in _basis_scalars(F)]
        order = order_sp(n, q)
    gens = [g for g in gens if not (g == Mx.identity(F, n)).all()] or [Mx.identity(F, n)]
    label = {"gl": "GL", "sl": "SL", "pgl": "PGL", "psl": "PSL", "sp": "Sp"}[kind]
    return MatrixGroup(F, n, gens, kind, order=order, name=f"{label}({n},{q})")


def matrix_group(gens, q, name="user") -> MatrixGroup:
    """A user-supplied matrix group; order unknown until realized."""
    F = gf(q)
    gens = [np.asarray(g, dtype=np.int64) for g in gens]
    n = gens[0].shape[0]
    for g in gens:
        if not Mx.is_invertible(F, g):
            raise UnsupportedGroup("generators must be invertible")
    return MatrixGroup(F, n, gens, "user", name=name)


def preserves_form(F: GF, g, J):
    """g J g^T == J (row convention) for the Gram matrix J."""
    return (Mx.mat_mul(F, Mx.mat_mul(F, g, J), g.T) == J).all()
