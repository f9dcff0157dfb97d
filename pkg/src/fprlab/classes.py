"""Conjugacy classes by conjugation orbits, with exact element lookup.

Each class is enumerated in full as an orbit of the conjugation action
x -> g^-1 x g under the group generators, so its representative can always
be the lexicographically least element.  Small groups are swept element by
element; larger ones are sampled (uniform random elements plus all their
powers) until the class sizes add up to the group order, which certifies
the table complete.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .config import get_config
from .errors import CapExceeded, IncompleteClassTable, MembershipError, NotASubgroup
from .permcore.group import PermGroup
from .permcore.perm import Permutation
from .fflinalg.field import is_prime


@dataclass(frozen=True)
class ConjClass:
    rep: Permutation
    order: int
    size: int
    centralizer_order: int

    @property
    def is_identity(self):
        return self.order == 1


def _dtype(n):
    return np.uint8 if n <= 256 else np.uint16 if n <= 65536 else np.uint32


def _keys(rows):
    rows = np.ascontiguousarray(rows)
    return rows.view(np.dtype((np.void, rows.shape[1] * rows.itemsize))).ravel().tolist()


def _conj_pairs(G: PermGroup):
    dt = _dtype(G.degree)
    out = []
    for g in G.generators:
        if g.is_identity():
            continue
        out.append((np.asarray(g.images, dtype=dt), np.asarray((~g).images, dtype=np.intp)))
    return out


def conjugation_orbit(G: PermGroup, x, cap=None):
    """All conjugates of x as rows of an array (x first), plus their row keys.

    Raises CapExceeded past ``cap`` elements.
    """
    dt = _dtype(G.degree)
    x = np.asarray(x.images if isinstance(x, Permutation) else x, dtype=dt)[None, :]
    pairs = _conj_pairs(G)
    local = set()
    k0 = _keys(x)[0]
    local.add(k0)
    chunks = [x]
    frontier = x
    total = 1
    while frontier.shape[0]:
        # g^-1 x g maps a -> g(x(g^-1(a)))
        cand = np.concatenate([g[frontier[:, ginv]] for g, ginv in pairs]) if pairs else frontier[:0]
        keep = []
        for i, k in enumerate(_keys(cand)):
            if k not in local:
                local.add(k)
                keep.append(i)
        frontier = cand[keep]
        if frontier.shape[0]:
            chunks.append(frontier)
            total += frontier.shape[0]
            if cap is not None and total > cap:
                raise CapExceeded("class size", total, cap)
    return np.concatenate(chunks), local


def _lex_least(rows):
    idx = np.lexsort(rows.T[::-1])[0]
    return tuple(int(a) for a in rows[idx])


class ClassTable:
    """Complete list of classes sorted by (element order, size, representative)."""

    def __init__(self, group: PermGroup, classes, lookup, method):
        self.group = group
        self.classes = classes
        self._lookup = lookup
        self.method = method
        self.prime_order_indices = [i for i, c in enumerate(classes) if is_prime(c.order)]
        self._power_maps = {}

    def __len__(self):
        return len(self.classes)

    def __iter__(self):
        return iter(self.classes)

    def __getitem__(self, i):
        return self.classes[i]

    def index_of(self, x) -> int:
        imgs = x.images if isinstance(x, Permutation) else tuple(x)
        key = np.asarray(imgs, dtype=_dtype(self.group.degree)).tobytes()
        try:
            return self._lookup[key]
        except KeyError:
            raise MembershipError(f"{x} is not an element of the group") from None

    def class_of(self, x) -> ConjClass:
        return self.classes[self.index_of(x)]

    def power_map(self, m):
        """Index of the class of rep^m, for every class."""
        if m not in self._power_maps:
            self._power_maps[m] = [self.index_of(c.rep ** m) for c in self.classes]
        return self._power_maps[m]

    def prime_order_classes(self):
        return [self.classes[i] for i in self.prime_order_indices]

    def sizes(self):
        return [c.size for c in self.classes]


def _finish(G, found, lookup, method):
    order = G.order()
    found.sort(key=lambda t: (t[1].order, t[1].size, t[1].rep.images))
    remap = {old: new for new, (old, _) in enumerate(found)}
    lookup = {k: remap[v] for k, v in lookup.items()}
    classes = [c for _, c in found]
    if sum(c.size for c in classes) != order:
        raise IncompleteClassTable("class sizes do not sum to the group order")
    return ClassTable(G, classes, lookup, method)


def _add_class(G, x, lookup, found, order):
    rows, keys = conjugation_orbit(G, x)
    idx = len(found)
    for k in keys:
        lookup[k] = idx
    rep = Permutation._raw(_lex_least(rows))
    size = rows.shape[0]
    found.append((idx, ConjClass(rep, rep.order(), size, order // size)))


def class_table(G: PermGroup, config=None) -> ClassTable:
    """Class table of G, cached on the group object."""
    cached = getattr(G, "_class_table", None)
    if cached is not None:
        return cached
    config = config or get_config()
    order = G.order()
    if order > config.caps.class_enumeration:
        raise CapExceeded("group order for class enumeration", order, config.caps.class_enumeration)
    lookup = {}
    found = []
    if order <= config.caps.full_enumeration:
        E = np.ascontiguousarray(G.elements_array().astype(_dtype(G.degree), copy=False))
        for i, k in enumerate(_keys(E)):
            if k not in lookup:
                _add_class(G, E[i], lookup, found, order)
        table = _finish(G, found, lookup, "enumerated")
    else:
        rng = config.substream(f"classes/{G.degree}/{order}")
        dt = _dtype(G.degree)
        covered = 0
        samples = 0
        limit = max(20000, 50 * G.degree)
        while covered < order:
            if samples >= limit:
                raise IncompleteClassTable(
                    f"{covered} of {order} elements classified after {samples} samples")
            samples += 1
            x = G.random_element(rng)
            # every power of x lies in some class; small classes hide there
            p = x
            for _ in range(x.order()):
                key = np.asarray(p.images, dtype=dt).tobytes()
                if key not in lookup:
                    _add_class(G, p, lookup, found, order)
                    covered += found[-1][1].size
                p = p * x
        table = _finish(G, found, lookup, "sampled")
    G._class_table = table
    return table


def class_of(G: PermGroup, x, config=None) -> ConjClass:
    """The class of x in G, by a direct conjugation orbit (no full table)."""
    if not G.contains(x):
        raise MembershipError(f"{x} is not in the group")
    config = config or get_config()
    rows, _ = conjugation_orbit(G, x, cap=config.caps.class_enumeration)
    rep = Permutation._raw(_lex_least(rows))
    size = rows.shape[0]
    return ConjClass(rep, rep.order(), size, G.order() // size)


def class_elements(G: PermGroup, x, config=None):
    """Every element of the class of x, as Permutations."""
    config = config or get_config()
    rows, _ = conjugation_orbit(G, x, cap=config.caps.class_enumeration)
    return [Permutation._raw(tuple(int(a) for a in r)) for r in rows]


def fusion_count(G: PermGroup, H: PermGroup, C: ConjClass, method="auto", config=None) -> int:
    """|C ∩ H| for a G-class C and a subgroup H.

    ``method="sift"`` enumerates C and tests membership in H;
    ``method="classes"`` splits H into its own classes and asks which of
    them lie in C.  ``auto`` sifts when C is no larger than H.
    """
    config = config or get_config()
    if not H.is_subgroup_of(G):
        raise NotASubgroup("H is not a subgroup of G")
    if method == "auto":
        method = "sift" if C.size <= max(H.order(), 10**5) else "classes"
    if method == "sift":
        rows, _ = conjugation_orbit(G, C.rep, cap=config.caps.class_enumeration)
        if rows.shape[0] != C.size:
            raise AssertionError("class size disagrees with its orbit")
        chain = H.chain
        return sum(1 for r in rows if chain.contains(tuple(int(a) for a in r)))
    if method == "classes":
        target = class_elements_keys(G, C, config)
        dt = _dtype(G.degree)
        total = 0
        for c in class_table(H, config):
            if np.asarray(c.rep.images, dtype=dt).tobytes() in target:
                total += c.size
        return total
    raise ValueError(f"unknown method {method!r}")


def class_elements_keys(G, C, config=None):
    config = config or get_config()
    _, keys = conjugation_orbit(G, C.rep, cap=config.caps.class_enumeration)
    return keys


def centralizer_order(G: PermGroup, x, config=None):
    return class_of(G, x, config).centralizer_order


def element_order_counts(table: ClassTable):
    """Map element order -> number of elements of that order."""
    out = {}
    for c in table:
        out[c.order] = out.get(c.order, 0) + c.size
    return dict(sorted(out.items()))
