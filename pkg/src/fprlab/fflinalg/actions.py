"""Permutation actions of matrix groups on vectors, points, subspaces and forms.

Every realized action re-derives the group order from its own stabilizer
chain and compares it with the classical order formula; a mismatch means
the generators are wrong and raises immediately.
"""
from __future__ import annotations

import itertools

import numpy as np

from ..config import get_config
from ..errors import CapExceeded, NotTransitive, SpecSemanticError
from ..permcore import chain as _chain
from ..permcore.actions import Action, ActionSpec, LieTag
from ..permcore.group import PermGroup
from ..permcore.perm import Permutation
from . import matrix as Mx
from .classical import MatrixGroup
from .field import GF


def gaussian_binomial(n, k, q):
    num, den = 1, 1
    for i in range(k):
        num *= q**(n - i) - 1
        den *= q**(i + 1) - 1
    return num // den


def all_vectors(F: GF, n):
    q = F.q
    codes = np.arange(q**n, dtype=np.int64)
    return np.stack([(codes // q**i) % q for i in range(n)], axis=1)


def _codes(V, q):
    return V @ (q ** np.arange(V.shape[1], dtype=np.int64))


def normalize_rows(F: GF, V):
    """Scale each nonzero row so its first nonzero entry is 1."""
    V = np.asarray(V, dtype=np.int64)
    lead_pos = np.argmax(V != 0, axis=1)
    lead = V[np.arange(V.shape[0]), lead_pos]
    return F.mul[F.inv[lead][:, None], V]


def projective_points(F: GF, n):
    V = all_vectors(F, n)[1:]
    lead = V[np.arange(V.shape[0]), np.argmax(V != 0, axis=1)]
    return V[lead == 1]


def subspaces(F: GF, n, k):
    """Every k-subspace as its reduced echelon basis (k x n array)."""
    q = F.q
    out = []
    for pivots in itertools.combinations(range(n), k):
        free = [(r, c) for r in range(k) for c in range(pivots[r] + 1, n) if c not in pivots]
        for vals in itertools.product(range(q), repeat=len(free)):
            B = np.zeros((k, n), dtype=np.int64)
            for r, c in enumerate(pivots):
                B[r, c] = 1
            for (r, c), v in zip(free, vals):
                B[r, c] = v
            out.append(B)
    return out


class _Lookup:
    """Sorted integer codes -> point index."""

    def __init__(self, codes):
        self.order = np.argsort(codes, kind="stable")
        self.sorted = codes[self.order]

    def __call__(self, codes):
        pos = np.searchsorted(self.sorted, codes)
        if (pos >= len(self.sorted)).any() or (self.sorted[np.minimum(pos, len(self.sorted) - 1)] != codes).any():
            raise SpecSemanticError("image left the point set; the action is not closed")
        return self.order[pos]


def _lie_tag(G: MatrixGroup):
    n, q = G.n, G.q
    if G.kind in ("gl", "sl", "pgl", "psl"):
        return LieTag("L", n, q)
    if G.kind == "sp":
        if n == 2:
            return LieTag("L", 2, q)
        if (n, q) == (4, 2):
            # Sp4(2) = Sym(6); its socle is Alt(6) = PSL2(9)
            return LieTag("L", 2, 9)
        return LieTag("S", n, q)
    return None


def _permgroup(perms, degree, expected):
    gens = [p.images for p in perms]
    if expected is None:
        return PermGroup(perms, degree)
    ch = _chain.build_chain(gens, degree, seed=get_config().seed, known_order=expected)
    if ch.order() != expected:
        raise AssertionError(f"generators give order {ch.order()}, formula says {expected}")
    return PermGroup(perms, degree, order=expected)


def act_on(G: MatrixGroup, spec: ActionSpec, config=None) -> Action:
    config = config or get_config()
    F, n, q = G.field, G.n, G.q
    kind = spec.kind
    cap = config.caps.degree
    meta = {}
    if kind == "vectors":
        if G.projective:
            raise SpecSemanticError("projective groups do not act on vectors")
        if q**n > cap:
            raise CapExceeded("action degree", q**n, cap)
        pts = all_vectors(F, n)
        w = q ** np.arange(n, dtype=np.int64)

        def induce(x):
            if isinstance(x, Permutation):
                return x
            return Permutation._raw(tuple(int(c) for c in Mx.act_rows(F, pts, x) @ w))

        expected = G.order
        labels = [tuple(int(a) for a in v) for v in pts]
        transitive = False
        lie = None
    elif kind in ("projective", "subspaces"):
        k = 1 if kind == "projective" else spec.k
        if not 1 <= k < n:
            raise SpecSemanticError(f"subspace dimension {k} must lie in 1..{n - 1}")
        size = gaussian_binomial(n, k, q)
        if size > cap:
            raise CapExceeded("action degree", size, cap)
        if k == 1:
            pts = projective_points(F, n)
            look = _Lookup(_codes(pts, q))

            def induce(x):
                if isinstance(x, Permutation):
                    return x
                img = normalize_rows(F, Mx.act_rows(F, pts, x))
                return Permutation._raw(tuple(int(i) for i in look(_codes(img, q))))

            labels = [tuple(int(a) for a in v) for v in pts]
        else:
            bases = subspaces(F, n, k)
            index = {B.tobytes(): i for i, B in enumerate(bases)}

            def induce(x):
                if isinstance(x, Permutation):
                    return x
                return Permutation._raw(tuple(index[Mx.rref(F, Mx.mat_mul(F, B, x))[0].tobytes()]
                                              for B in bases))

            labels = [tuple(tuple(int(a) for a in row) for row in B) for B in bases]
        expected = G.projective_order() if G.kind != "user" else None
        transitive = True
        lie = _lie_tag(G)
    elif kind == "forms":
        if G.kind != "sp" or q % 2:
            raise SpecSemanticError("quadratic-form actions need Sp(2m, q) with q even")
        induce, labels, size = _forms_action(G, spec.sign, cap)
        expected = G.order
        transitive = True
        lie = _lie_tag(G)
        meta["sign"] = spec.sign
    else:
        raise SpecSemanticError(f"action {spec} is not defined for matrix groups")
    perms = [induce(g) for g in G.generators]
    group = _permgroup(perms, len(labels), expected)
    group.name = f"{G.name} @{spec}"
    act = Action(group, labels, spec, G, induce=induce, transitive=transitive, lie=lie,
                 name=f"{G.name} @{spec}", meta=meta)
    if transitive and not group.is_transitive():
        raise NotTransitive(f"{act.name} is not transitive")
    return act


def quadratic_form_values(F: GF, J, A, V):
    """Q_a(v) for every form a (rows of A) and vector v (rows of V).

    Q_a(v) = sum_i a_i v_i^2 + sum_{i<j} J_ij v_i v_j, so Q_a polarizes to the
    alternating form with Gram matrix J (characteristic 2).
    """
    n = V.shape[1]
    cross = np.zeros(V.shape[0], dtype=np.int64)
    for i in range(n):
        for j in range(i + 1, n):
            if J[i, j]:
                cross = F.add[cross, F.mul[J[i, j], F.mul[V[:, i], V[:, j]]]]
    sq = F.mul[V, V]
    out = Mx.act_rows(F, A, sq.T)           # sum_i a_i v_i^2, shape (forms, vectors)
    return F.add[out, cross[None, :]]


def form_zero_count(q, n, sign):
    m = n // 2
    eps = -1 if sign == "minus" else 1
    return q**(n - 1) + eps * (q**m - q**(m - 1))


def _forms_action(G: MatrixGroup, sign, cap):
    F, n, q = G.field, G.n, G.q
    J = G.form()
    A = all_vectors(F, n)
    V = all_vectors(F, n)
    if A.shape[0] * V.shape[0] > 50 * cap:
        raise CapExceeded("form table size", A.shape[0] * V.shape[0], 50 * cap)
    zeros = (quadratic_form_values(F, J, A, V) == 0).sum(axis=1)
    keep = A[zeros == form_zero_count(q, n, sign)]
    if keep.shape[0] > cap:
        raise CapExceeded("action degree", keep.shape[0], cap)
    look = _Lookup(_codes(keep, q))
    E = Mx.identity(F, n)

    def induce(x):
        if isinstance(x, Permutation):
            return x
        # Q^g(v) = Q(v g^-1): new coefficient i is Q evaluated at row i of g^-1
        rows = Mx.mat_mul(F, E, Mx.mat_inv(F, x))
        new = quadratic_form_values(F, J, keep, rows)
        return Permutation._raw(tuple(int(i) for i in look(_codes(new, q))))

    labels = [tuple(int(a) for a in v) for v in keep]
    return induce, labels, len(labels)


def matrix_of(action: Action, perm: Permutation):
    """Recover the matrix of an element of a vectors action from its permutation."""
    if action.spec.kind != "vectors":
        raise SpecSemanticError("matrices are recoverable only from the vectors action")
    G = action.source
    q, n = G.q, G.n
    rows = [action.labels[perm[q**i]] for i in range(n)]
    return np.asarray(rows, dtype=np.int64)
