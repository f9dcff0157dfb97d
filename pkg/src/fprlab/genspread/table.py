"""Small groups in index space: multiplication table, inverses, classes.

Elements are numbered by their row in the chain's element array.  Rows are
keyed by their images of the base points, which determine an element
uniquely, packed into one int64 so lookups are a vectorized searchsorted.
"""
from __future__ import annotations

import numpy as np

from ..classes import class_table
from ..config import get_config
from ..errors import CapExceeded
from ..permcore.group import PermGroup
from ..permcore.perm import Permutation


class GroupTable:
    def __init__(self, G: PermGroup, cap=None, config=None):
        config = config or get_config()
        cap = config.caps.graph if cap is None else cap
        N = G.order()
        if N > cap:
            raise CapExceeded("group order for index-space tables", N, cap)
        self.G = G
        self.N = N
        n = G.degree
        E = np.asarray(G.elements_array(), dtype=np.int64)
        self.E = E
        base = list(G.chain.base) or [0]
        if n ** len(base) >= 2**62:
            raise CapExceeded("base key width", n ** len(base), 2**62)
        self._base = np.asarray(base)
        self._w = n ** np.arange(len(base), dtype=np.int64)
        codes = E[:, self._base] @ self._w
        self._order = np.argsort(codes)
        self._sorted = codes[self._order]
        if np.unique(self._sorted).size != N:
            raise AssertionError("base images must identify elements")
        self.identity = int(self.lookup(np.arange(n)[None, :])[0])
        # T[i, j] = index of e_i * e_j; (e_i e_j)(a) = e_j(e_i(a))
        T = np.empty((N, N), dtype=np.int32)
        Eb = E[:, self._base]
        for j in range(N):
            T[:, j] = self._find(E[j][Eb] @ self._w)
        self.T = T
        self.inv = np.argmax(T == self.identity, axis=1).astype(np.int32)
        table = class_table(G, config)
        self.class_index = self._class_indices(table)
        self.table = table
        self.rep_index = [self.index(c.rep) for c in table]
        self.orders = np.array([table[c].order for c in self.class_index], dtype=np.int64)
        self.gen_index = [self.index(g) for g in G.generators if not g.is_identity()]

    def _class_indices(self, table):
        out = np.empty(self.N, dtype=np.int32)
        for i in range(self.N):
            out[i] = table.index_of(tuple(int(a) for a in self.E[i]))
        return out

    def _find(self, codes):
        pos = np.searchsorted(self._sorted, codes)
        return self._order[pos]

    def lookup(self, rows):
        rows = np.asarray(rows, dtype=np.int64)
        return self._find(rows[:, self._base] @ self._w)

    def index(self, x) -> int:
        imgs = x.images if isinstance(x, Permutation) else tuple(x)
        return int(self.lookup(np.asarray(imgs)[None, :])[0])

    def element(self, i) -> Permutation:
        return Permutation._raw(tuple(int(a) for a in self.E[i]))

    def conjugate(self, z, g):
        """Index of g^-1 z g; z may be an index array."""
        return self.T[self.T[self.inv[g], z], g]

    def class_members(self, c):
        return np.nonzero(self.class_index == c)[0]

    def conjugators(self, c):
        """For every member z of class c, an element g with rep^g = z."""
        rep = self.rep_index[c]
        conj = {rep: self.identity}
        queue = [rep]
        for z in queue:
            gz = conj[z]
            for s in self.gen_index:
                w = int(self.conjugate(z, s))
                if w not in conj:
                    conj[w] = int(self.T[gz, s])
                    queue.append(w)
        return conj

    def closure_sizes(self, x, ys):
        """|<x, y>| for a fixed x and every y in ys, computed in one batch.

        Returns sizes, except that any closure exceeding N/2 is reported as N
        (it must be the whole group by Lagrange).
        """
        ys = np.asarray(ys, dtype=np.int64)
        m = ys.size
        N = self.N
        S = np.zeros((m, N), dtype=bool)
        S[:, self.identity] = True
        S[np.arange(m), ys] = True
        S[:, x] = True
        sizes = np.zeros(m, dtype=np.int64)
        inv_x = self.T[:, self.inv[x]]                 # g -> g x^-1
        active = np.arange(m)
        prev = S.sum(axis=1)
        while active.size:
            A = S[active]
            yinv = self.inv[ys[active]]
            gy = self.T[:, yinv].T                     # row r: g -> g y_r^-1
            new = A | A[:, inv_x] | np.take_along_axis(A, gy, axis=1)
            S[active] = new
            cnt = new.sum(axis=1)
            big = cnt * 2 > N
            stuck = cnt == prev[active]
            fin = big | stuck
            sizes[active[big]] = N
            sizes[active[stuck & ~big]] = cnt[stuck & ~big]
            prev[active] = cnt
            active = active[~fin]
        return sizes

    def neighbours(self, x):
        """Boolean mask of y with <x, y> = G."""
        return self.closure_sizes(x, np.arange(self.N)) == self.N
