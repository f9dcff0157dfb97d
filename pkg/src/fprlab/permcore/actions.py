"""Turning a group plus an action recipe into a permutation group on a set.

The recipe is an :class:`ActionSpec`; :func:`realize` returns an
:class:`Action` carrying the induced permutation group, a label for every
point, and an ``induce`` map from source elements to permutations of the
new domain.  Matrix-group recipes are delegated to :mod:`fprlab.fflinalg`.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Any, Callable, Optional

from ..config import get_config
from ..errors import CapExceeded, NotASubgroup, NotTransitive, SpecSemanticError
from . import chain as _chain
from .group import PermGroup
from .named import WreathProduct
from .perm import Permutation, split_generators

PERM_KINDS = ("natural", "ksets", "tuples", "cosets", "regular", "product")
MATRIX_KINDS = ("projective", "vectors", "subspaces", "forms")


@dataclass(frozen=True)
class ActionSpec:
    kind: str
    k: Optional[int] = None
    subgroup: Optional[str] = None   # generators in cycle notation, for cosets
    sign: Optional[str] = None       # "minus" / "plus", for forms

    def __post_init__(self):
        if self.kind not in PERM_KINDS + MATRIX_KINDS:
            raise SpecSemanticError(f"unknown action kind {self.kind!r}")
        if self.kind in ("ksets", "tuples", "subspaces") and (self.k is None or self.k < 1):
            raise SpecSemanticError(f"{self.kind} needs a positive k")
        if self.kind == "cosets" and self.subgroup is None:
            raise SpecSemanticError("cosets needs subgroup generators")
        if self.kind == "forms" and self.sign not in ("minus", "plus"):
            raise SpecSemanticError("forms needs sign minus or plus")

    def __str__(self):
        if self.kind in ("ksets", "tuples", "subspaces"):
            return f"{self.kind}:{self.k}"
        if self.kind == "cosets":
            return f"cosets:{self.subgroup}"
        if self.kind == "forms":
            return f"forms:{self.sign}"
        return self.kind


@dataclass
class LieTag:
    """Lie-type bookkeeping for the 4/(3q) check: socle family, rank data, field."""

    family: str     # "L" (PSL), "S" (PSp), "O-" ...
    n: int
    q: int

    def socle_name(self):
        return {"L": "PSL", "S": "PSp", "O-": "POmega-", "O+": "POmega+"}[self.family] + f"({self.n},{self.q})"


@dataclass
class Action:
    group: PermGroup
    labels: list
    spec: ActionSpec
    source: Any
    induce: Callable[[Any], Permutation]
    transitive: bool = True
    lie: Optional[LieTag] = None
    name: str = ""
    meta: dict = field(default_factory=dict)

    @property
    def degree(self):
        return self.group.degree

    def label(self, point):
        return self.labels[point]

    def __repr__(self):
        return f"Action({self.name or self.spec}, degree={self.degree})"


def _check_degree(n, config):
    cap = config.caps.degree
    if n > cap:
        raise CapExceeded("action degree", n, cap)


class CosetSpace:
    """Right cosets Hg of a subgroup H, keyed by their least element.

    The least element of Hg is found greedily from H's chain on the base
    0, 1, ..., n-1: at each level pick the orbit point whose image under the
    running element is smallest.
    """

    def __init__(self, H: PermGroup, seed=None):
        self.H = H
        self.chain = _chain.build_chain([g.images for g in H.generators], H.degree,
                                        seed=H.seed if seed is None else seed,
                                        base_prefix=tuple(range(H.degree)),
                                        known_order=H.order())
        self._levels = [(lv.point, list(lv.trans.items())) for lv in self.chain.levels
                        if len(lv.trans) > 1]

    def canonical(self, g):
        cur = g
        for _, items in self._levels:
            best_b, best_u, best_v = None, None, None
            for b, u in items:
                v = cur[b]
                if best_v is None or v < best_v:
                    best_v, best_b, best_u = v, b, u
            cur = _chain.mul(best_u, cur)
        return cur


def _coset_action(G: PermGroup, H: PermGroup, config):
    for h in H.generators:
        if not G.contains(h):
            raise NotASubgroup(f"generator {h} of the subgroup is not in the group")
    index = G.order() // H.order()
    _check_degree(index, config)
    space = CosetSpace(H)
    start = space.canonical(tuple(range(G.degree)))
    reps = [start]
    pos = {start: 0}
    gen_imgs = [g.images for g in G.generators]
    images = [[] for _ in gen_imgs]
    i = 0
    while i < len(reps):
        r = reps[i]
        for gi, s in enumerate(gen_imgs):
            c = space.canonical(_chain.mul(r, s))
            j = pos.get(c)
            if j is None:
                j = len(reps)
                pos[c] = j
                reps.append(c)
            images[gi].append(j)
        i += 1
    assert len(reps) == index
    perms = [Permutation._raw(tuple(img)) for img in images]

    def induce(x):
        x = x.images if isinstance(x, Permutation) else tuple(x)
        return Permutation._raw(tuple(pos[space.canonical(_chain.mul(r, x))] for r in reps))

    group = PermGroup(perms, index)
    labels = [Permutation._raw(r) for r in reps]
    return group, labels, induce, {"subgroup": H, "coset_space": space}


def _subset_action(G: PermGroup, k: int, ordered: bool, config):
    n = G.degree
    if k > n:
        raise SpecSemanticError(f"k={k} exceeds degree {n}")
    size = math.perm(n, k) if ordered else math.comb(n, k)
    _check_degree(size, config)
    pts = list(itertools.permutations(range(n), k) if ordered
               else itertools.combinations(range(n), k))
    pos = {p: i for i, p in enumerate(pts)}

    def induce(x):
        img = x.images if isinstance(x, Permutation) else x
        if ordered:
            return Permutation._raw(tuple(pos[tuple(img[a] for a in p)] for p in pts))
        return Permutation._raw(tuple(pos[tuple(sorted(img[a] for a in p))] for p in pts))

    group = PermGroup([induce(g) for g in G.generators], len(pts))
    return group, [frozenset(p) if not ordered else p for p in pts], induce


def _regular_action(G: PermGroup, config):
    _check_degree(G.order(), config)
    elems = [e.images for e in G.elements(cap=config.caps.degree)]
    pos = {e: i for i, e in enumerate(elems)}

    def induce(x):
        x = x.images if isinstance(x, Permutation) else x
        return Permutation._raw(tuple(pos[_chain.mul(e, x)] for e in elems))

    group = PermGroup([induce(g) for g in G.generators], len(elems), order=G.order())
    return group, [Permutation._raw(e) for e in elems], induce


def realize(G, spec: ActionSpec, config=None) -> Action:
    """Induced permutation action of ``G`` described by ``spec``.

    Intransitive results are rejected, except the full vector space action
    of a matrix group, which is flagged non-transitive.
    """
    config = config or get_config()
    if spec.kind in MATRIX_KINDS:
        from ..fflinalg.actions import act_on
        return act_on(G, spec, config)
    if isinstance(G, WreathProduct):
        if spec.kind == "product":
            group = G.product_action()
            _check_degree(group.degree, config)
            act = Action(group, [tuple((x // G.inner.degree**i) % G.inner.degree + 1
                                       for i in range(G.outer.degree))
                                 for x in range(group.degree)],
                         spec, G, induce=lambda x: x, name=f"{G.name} @product")
            _require_transitive(act)
            return act
        G = G.natural()
    if spec.kind == "product":
        raise SpecSemanticError("product action needs a wreath product")
    if not isinstance(G, PermGroup):
        raise SpecSemanticError(f"action {spec} is not defined for {G!r}")
    meta = {}
    if spec.kind == "natural":
        group, labels, induce = G, list(range(1, G.degree + 1)), (lambda x: x)
    elif spec.kind in ("ksets", "tuples"):
        group, labels, induce = _subset_action(G, spec.k, spec.kind == "tuples", config)
    elif spec.kind == "cosets":
        gens = [Permutation.parse(t, G.degree) for t in split_generators(spec.subgroup)]
        H = PermGroup(gens, G.degree)
        group, labels, induce, meta = _coset_action(G, H, config)
    elif spec.kind == "regular":
        group, labels, induce = _regular_action(G, config)
    else:  # pragma: no cover - guarded by ActionSpec
        raise SpecSemanticError(f"unsupported action {spec}")
    act = Action(group, labels, spec, G, induce=induce,
                 name=f"{G.name or 'G'} @{spec}", meta=meta)
    _require_transitive(act)
    return act


def coset_action(G: PermGroup, H: PermGroup, config=None) -> Action:
    """Action of G on the right cosets of an explicit subgroup H."""
    config = config or get_config()
    group, labels, induce, meta = _coset_action(G, H, config)
    return Action(group, labels, ActionSpec("cosets", subgroup=",".join(
        g.to_cycles() for g in H.generators)), G, induce=induce,
        name=f"{G.name or 'G'} on cosets", meta=meta)


def _require_transitive(act):
    if not act.group.is_transitive():
        raise NotTransitive(f"{act.name} is not transitive")
