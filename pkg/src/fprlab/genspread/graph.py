"""The generating graph: vertices are the non-identity elements, edges the
generating pairs.  Conjugation is a graph automorphism, so neighbourhoods
are computed for class representatives and transported to the rest.

The graph is simple: in a cyclic group a generator x has <x, x> = G, but
no loop is recorded, and the identity is never a vertex."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from ..config import get_config
from ..permcore.group import PermGroup
from .table import GroupTable


@dataclass
class GeneratingGraph:
    table: GroupTable
    vertices: np.ndarray        # element indices of the non-identity elements
    adjacency: np.ndarray       # bool, len(vertices) square

    @property
    def order(self):
        return len(self.vertices)

    def edge_count(self):
        return int(self.adjacency.sum()) // 2

    def degrees(self):
        return self.adjacency.sum(axis=1).astype(np.int64)

    def bitsets(self, complement=False):
        A = ~self.adjacency if complement else self.adjacency
        if complement:
            A = A.copy()
            np.fill_diagonal(A, False)
        weights = [1 << i for i in range(self.order)]
        return [sum(w for w, b in zip(weights, row) if b) for row in A.tolist()]

    def vertex_of(self, element_index):
        return int(np.searchsorted(self.vertices, element_index))


def build_graph(G: PermGroup, config=None) -> GeneratingGraph:
    config = config or get_config()
    GT = GroupTable(G, config=config)
    N = GT.N
    verts = np.array([i for i in range(N) if i != GT.identity], dtype=np.int64)
    pos = np.full(N, -1, dtype=np.int64)
    pos[verts] = np.arange(verts.size)
    A = np.zeros((verts.size, verts.size), dtype=bool)
    for c, rep in enumerate(GT.rep_index):
        if rep == GT.identity:
            continue
        nb = np.nonzero(GT.neighbours(rep))[0]
        nb = nb[nb != GT.identity]
        for z, g in GT.conjugators(c).items():
            A[pos[z], pos[GT.conjugate(nb, g)]] = True
    np.fill_diagonal(A, False)
    if not (A == A.T).all():
        raise AssertionError("generating graph must be symmetric")
    return GeneratingGraph(GT, verts, A)


# clique search -----------------------------------------------------------

class _Budget(Exception):
    pass


def _colour_sort(P, adj):
    """Greedy colouring of the vertex set P; vertices listed by colour."""
    order, colours = [], []
    k = 0
    Q = P
    while Q:
        k += 1
        avail = Q
        while avail:
            low = avail & -avail
            v = low.bit_length() - 1
            order.append(v)
            colours.append(k)
            Q &= ~low
            avail &= ~low & ~adj[v]
    return order, colours


def max_clique(adj, budget):
    """Branch and bound with colouring bounds.  Returns (clique, exact, upper)."""
    n = len(adj)
    best = []
    nodes = [0]

    def expand(R, P):
        nodes[0] += 1
        if nodes[0] > budget:
            raise _Budget
        order, colours = _colour_sort(P, adj)
        for v, c in zip(reversed(order), reversed(colours)):
            if len(R) + c <= len(best):
                return
            R.append(v)
            newP = P & adj[v]
            if newP:
                expand(R, newP)
            elif len(R) > len(best):
                best[:] = R
            R.pop()
            P &= ~(1 << v)

    full = (1 << n) - 1
    upper = max(_colour_sort(full, adj)[1], default=0)
    try:
        expand([], full)
    except _Budget:
        return list(best), False, upper
    return list(best), True, len(best)


def is_clique(adj, vs):
    return all(adj[a] >> b & 1 for i, a in enumerate(vs) for b in vs[i + 1:])


# chromatic number (optional, slow) ----------------------------------------

def chromatic_number(adj, budget, lower=0):
    """DSATUR branch and bound.  Returns (best colouring size, exact flag)."""
    n = len(adj)
    nbrs = [[j for j in range(n) if adj[i] >> j & 1] for i in range(n)]
    colour = [0] * n

    def greedy():
        col = [0] * n
        for _ in range(n):
            v = max((u for u in range(n) if not col[u]),
                    key=lambda u: (len({col[w] for w in nbrs[u] if col[w]}), len(nbrs[u])))
            used = {col[w] for w in nbrs[v]}
            col[v] = next(c for c in range(1, n + 2) if c not in used)
        return max(col, default=0)

    best = [greedy()]
    nodes = [0]

    def search(coloured, k):
        nodes[0] += 1
        if nodes[0] > budget:
            raise _Budget
        if k >= best[0]:
            return
        if coloured == n:
            best[0] = k
            return
        v, sat = -1, -1
        for u in range(n):
            if colour[u]:
                continue
            s = len({colour[w] for w in nbrs[u] if colour[w]})
            if s > sat or (s == sat and len(nbrs[u]) > len(nbrs[v])):
                v, sat = u, s
        used = {colour[w] for w in nbrs[v]}
        for c in range(1, k + 2):
            if c in used or c >= best[0]:
                continue
            colour[v] = c
            search(coloured + 1, max(k, c))
            colour[v] = 0
            if best[0] <= lower:
                return

    try:
        search(0, 0)
    except _Budget:
        return best[0], False
    return best[0], True


# statistics -----------------------------------------------------------------

@dataclass
class Bounded:
    value: int                 # best witnessed value (a lower bound)
    exact: bool
    upper: int
    witness: list = field(default_factory=list)


@dataclass
class GraphStats:
    vertices: int
    edges: int
    degree_sequence: list
    connected: bool
    diameter: Optional[int]
    clique: Bounded
    coclique: Bounded
    posa: bool


def _eccentricity(A, start):
    n = A.shape[0]
    seen = np.zeros(n, dtype=bool)
    seen[start] = True
    frontier = seen.copy()
    d = 0
    while True:
        nxt = A[frontier].any(axis=0) & ~seen
        if not nxt.any():
            return d, seen.all()
        seen |= nxt
        frontier = nxt
        d += 1


def posa_check(graph_or_degrees) -> bool:
    """Sorted degrees d_1 <= ... <= d_m satisfy d_k >= k + 1 for all k < m/2."""
    if isinstance(graph_or_degrees, GeneratingGraph):
        degs = graph_or_degrees.degrees().tolist()
    else:
        degs = list(graph_or_degrees)
    degs = sorted(degs)
    m = len(degs)
    return all(degs[k - 1] >= k + 1 for k in range(1, m) if 2 * k < m)


def graph_stats(graph: GeneratingGraph, budget=None) -> GraphStats:
    budget = get_config().budget if budget is None else budget
    A = graph.adjacency
    GT = graph.table
    diam, connected = 0, True
    for rep in GT.rep_index:
        if rep == GT.identity:
            continue
        e, reach = _eccentricity(A, graph.vertex_of(rep))
        connected &= bool(reach)
        diam = max(diam, e)
    adj = graph.bitsets()
    cl, ex, up = max_clique(adj, budget)
    cadj = graph.bitsets(complement=True)
    co, cex, cup = max_clique(cadj, budget)
    return GraphStats(graph.order, graph.edge_count(), sorted(graph.degrees().tolist()),
                      connected, diam if connected else None,
                      Bounded(len(cl), ex, up, [int(graph.vertices[v]) for v in cl]),
                      Bounded(len(co), cex, cup, [int(graph.vertices[v]) for v in co]),
                      posa_check(graph))
