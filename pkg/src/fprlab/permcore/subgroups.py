"""Overgroups of a cyclic subgroup by brute-force join closure.

Starting from K = <y>, every proper subgroup containing y is reached by
repeatedly forming joins <K, g>.  One representative g per double coset
KgK is enough, because <K, g> only depends on KgK.  A subgroup is maximal
exactly when every such join is the whole group.

Subgroups are identified by the sorted indices of their elements inside
the full element list of G, so this only runs for groups within the order
cap unless the caller hands in candidate overgroups.
"""
from __future__ import annotations

import hashlib

import numpy as np

from ..config import get_config
from ..errors import CapExceeded, MembershipError
from . import chain as _chain
from .group import PermGroup, element_index
from .perm import Permutation


class ElementIndex:
    """All elements of G as numpy rows with a bytes -> row lookup."""

    def __init__(self, G: PermGroup):
        self.G = G
        self.rows = np.ascontiguousarray(G.elements_array())
        self.index = element_index(self.rows)
        self.order = self.rows.shape[0]

    def indices_of(self, rows):
        rows = np.ascontiguousarray(rows.astype(self.rows.dtype, copy=False))
        idx = self.index
        return np.fromiter((idx[r.tobytes()] for r in rows), dtype=np.int64, count=rows.shape[0])

    def left_map(self, k):
        """idx(g) -> idx(k*g); (k*g)(a) = g(k(a)) so columns are permuted by k."""
        return self.indices_of(self.rows[:, list(k)])

    def right_map(self, k):
        """idx(g) -> idx(g*k)."""
        k = np.asarray(k, dtype=self.rows.dtype)
        return self.indices_of(k[self.rows])

    def subgroup_indices(self, H: PermGroup):
        return np.sort(self.indices_of(H.elements_array()))


def _fingerprint(indices):
    return hashlib.sha1(np.asarray(indices, dtype=np.int64).tobytes()).hexdigest()


def _double_coset_reps(EI: ElementIndex, K: PermGroup, k_indices):
    """Least element index of each double coset KgK other than K itself."""
    maps = []
    for k in K.generators:
        if k.is_identity():
            continue
        maps.append(EI.left_map(k.images))
        maps.append(EI.right_map(k.images))
    n = EI.order
    label = np.full(n, -1, dtype=np.int64)
    label[k_indices] = 0
    reps = []
    for start in range(n):
        if label[start] >= 0:
            continue
        label[start] = start
        reps.append(start)
        frontier = np.array([start])
        while frontier.size:
            nxt = np.unique(np.concatenate([m[frontier] for m in maps])) if maps else frontier[:0]
            nxt = nxt[label[nxt] < 0]
            label[nxt] = start
            frontier = nxt
    return reps


def _join(K: PermGroup, g, seed):
    gens = list(K.generators) + [Permutation._raw(g)]
    ch = _chain.build_chain([h.images for h in gens], K.degree, seed=seed)
    return PermGroup(gens, K.degree, order=ch.order())


def _search(G: PermGroup, y: Permutation, config):
    cap = config.caps.order
    order_G = G.order()
    if order_G > cap:
        raise CapExceeded("group order for subgroup search", order_G, cap)
    if not G.contains(y):
        raise MembershipError(f"{y} is not in the group")
    EI = ElementIndex(G)
    start = PermGroup([y], G.degree, order=y.order())
    if start.order() == order_G:
        return [], []
    seen = {}
    maximal = []
    stack = [start]
    while stack:
        K = stack.pop()
        k_idx = EI.subgroup_indices(K)
        fp = _fingerprint(k_idx)
        if fp in seen:
            continue
        seen[fp] = K
        is_max = True
        for r in _double_coset_reps(EI, K, k_idx):
            J = _join(K, tuple(int(a) for a in EI.rows[r]), config.seed)
            if J.order() < order_G:
                is_max = False
                stack.append(J)
        if is_max:
            maximal.append((K.order(), fp, K))
    allsubs = sorted(((H.order(), fp, H) for fp, H in seen.items()), key=lambda t: t[:2])
    return sorted(maximal, key=lambda t: t[:2]), allsubs


def subgroups_containing(G: PermGroup, y: Permutation, config=None):
    """Every proper subgroup of G containing y, sorted by (order, fingerprint)."""
    config = config or get_config()
    _, subs = _search(G, y, config)
    return [H for _, _, H in subs]


def maximal_overgroups(G: PermGroup, y: Permutation, candidates=None, config=None):
    """Maximal subgroups of G that contain y.

    Without ``candidates`` the whole overgroup lattice of <y> is searched
    (order cap applies).  With ``candidates`` the caller's list is trusted as
    covering all maximal overgroups: members not containing y are dropped and
    only containment-maximal ones are kept.
    """
    config = config or get_config()
    if candidates is None:
        maxi, _ = _search(G, y, config)
        return [H for _, _, H in maxi]
    keep = [H for H in candidates if H.contains(y) and H.order() < G.order()]
    out = []
    for H in keep:
        if any(H.order() < M.order() and H.is_subgroup_of(M) for M in keep):
            continue
        if any(M.order() == H.order() and H.is_subgroup_of(M) for M in out):
            continue
        out.append(H)
    return sorted(out, key=lambda H: (H.order(), tuple(g.images for g in H.generators)))
