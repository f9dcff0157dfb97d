"""Permutation index, the genus of a generating tuple, and the genus screen.

For x acting on n points, ind(x) = n - (number of cycles of x).  A
product-one tuple g_1..g_k generating a transitive group G of degree n has
genus g determined by

    sum ind(g_i) = 2(n + g - 1).

The screen enumerates order signatures d_1 <= ... <= d_k for which that
equation could hold at a target genus, using per-order minimal indices and
optionally the bound sum (d_i - 1)/d_i >= 85/42, and then looks for an
explicit tuple realizing each surviving signature.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement, product
from typing import Optional

from .classes import class_table, conjugation_orbit
from .config import get_config
from .errors import GenusError, MembershipError
from .permcore import chain as _chain
from .permcore.actions import Action
from .permcore.group import PermGroup
from .permcore.perm import Permutation

HURWITZ_BOUND = Fraction(85, 42)

REFUTED_INDEX = "refuted-by-index"
REFUTED_8542 = "refuted-by-85/42"
REALIZED = "realized"
REFUTED_SEARCH = "refuted-by-search"
UNDECIDED = "undecided"


class IntransitiveTuple(GenusError):
    """The tuple generates an intransitive group."""


def ind(x: Permutation, n=None) -> int:
    """n minus the number of cycles of x, fixed points included."""
    n = x.degree if n is None else n
    if n != x.degree:
        raise ValueError(f"degree {n} does not match the permutation's degree {x.degree}")
    return n - x.num_cycles()


@dataclass
class GenTuple:
    elements: list
    action: Action
    indices: list
    genus: int


def _as_perm(action: Action, x):
    p = x if isinstance(x, Permutation) else action.induce(x)
    if p.degree != action.degree:
        raise MembershipError(f"{x!r} has degree {p.degree}, expected {action.degree}")
    return p


def _generated_order(gens, degree, target, seed):
    # a chain built with a known order stops early only when it reaches it
    ch = _chain.build_chain([g.images for g in gens], degree, seed=seed, known_order=target)
    return ch.order()


def gen_tuple(elements, action: Action) -> GenTuple:
    """Validate a tuple and compute its genus; see :func:`genus_of`."""
    perms = [_as_perm(action, x) for x in elements]
    if not perms:
        raise GenusError("empty tuple")
    G = action.group
    n = action.degree
    for p in perms:
        if not G.contains(p):
            raise MembershipError(f"{p} is not in the acting group")
    prod = perms[0]
    for p in perms[1:]:
        prod = prod * p
    if not prod.is_identity():
        raise GenusError("the product of the tuple is not the identity")
    H = PermGroup(perms, n)
    if not H.is_transitive():
        raise IntransitiveTuple("the tuple generates an intransitive group")
    if _generated_order(perms, n, G.order(), G.seed) != G.order():
        raise GenusError("the tuple does not generate the group")
    indices = [ind(p) for p in perms]
    total = sum(indices)
    if total % 2:
        raise GenusError(f"index sum {total} is odd")
    g = total // 2 - n + 1
    if g < 0:
        raise GenusError(f"negative genus {g}")
    return GenTuple(perms, action, indices, g)


def genus_of(elements, action: Action) -> int:
    """Genus of a product-one tuple generating the acting group transitively.

    Raises GenusError when the product is not 1, the tuple does not
    generate, or the formula gives an odd index sum or a negative genus;
    IntransitiveTuple (a GenusError) when the generated group is
    intransitive.
    """
    return gen_tuple(elements, action).genus


def min_index_table(action: Action, table=None) -> dict:
    """Element order -> least ind over non-identity elements of that order."""
    table = table or class_table(action.group)
    n = action.degree
    out = {}
    for c in table:
        if c.order == 1:
            continue
        v = ind(c.rep, n)
        out[c.order] = min(out.get(c.order, v), v)
    return dict(sorted(out.items()))


def orbit_count_identity_check(action: Action, g) -> bool:
    """Burnside for <g>: orb(g) = (n/d) * sum over x in <g> of fpr(x)."""
    p = _as_perm(action, g)
    n = action.degree
    d = p.order()
    orb = p.num_cycles()
    total = Fraction(0)
    x = Permutation.identity(n)
    for _ in range(d):
        total += Fraction(x.num_fixed(), n)
        x = x * p
    return Fraction(orb) == Fraction(n, d) * total


# the screen -----------------------------------------------------------------

@dataclass
class ScreenEntry:
    signature: tuple
    status: str
    index_sum: int               # sum of minimal indices over the signature
    ratio_sum: Fraction          # sum of (d_i - 1)/d_i
    witness: Optional[GenTuple] = None
    nodes: int = 0


@dataclass
class GenusScreen:
    action: Action
    g: int
    target: int                  # 2(n + g - 1)
    min_index: dict
    insoluble_filter: bool
    kmax: int
    entries: list = field(default_factory=list)

    @property
    def survivors(self):
        """Signatures passing the index test (and 85/42 when filtered)."""
        return [e for e in self.entries if e.status not in (REFUTED_INDEX, REFUTED_8542)]

    def status_of(self, signature):
        sig = tuple(sorted(signature))
        for e in self.entries:
            if e.signature == sig:
                return e.status
        return None


class _Budget(Exception):
    pass


def _mul(p, q):
    return tuple(map(q.__getitem__, p))


def _inv(p):
    out = [0] * len(p)
    for i, a in enumerate(p):
        out[a] = i
    return tuple(out)


def _realize(action, table, signature, target, budget, members):
    """Search for a generating product-one tuple with the given orders and
    index sum exactly ``target``.  Returns (status, witness, nodes)."""
    G = action.group
    n = action.degree
    order = G.order()
    by_order = {}
    for i, c in enumerate(table):
        by_order.setdefault(c.order, []).append(i)
    cls_ind = [ind(c.rep, n) for c in table]
    groups = {}
    for d in signature:
        groups[d] = groups.get(d, 0) + 1
    choices = [list(combinations_with_replacement(by_order[d], m)) for d, m in sorted(groups.items())]
    nodes = 0
    for pick in product(*choices):
        cls = [c for part in pick for c in part]
        if sum(cls_ind[c] for c in cls) != target:
            continue
        # Hurwitz moves permute the classes freely, so put the two largest
        # classes first and last: the first is fixed up to conjugacy and the
        # last is forced.
        cls.sort(key=lambda c: table[c].size)
        last = cls.pop()
        first = cls.pop()
        middle = cls
        g1 = table[first].rep.images
        pools = [members(c) for c in middle]
        stack = [(0, g1, [g1])]
        while stack:
            depth, run, chosen = stack.pop()
            nodes += 1
            if nodes > budget:
                raise _Budget(nodes)
            if depth == len(middle):
                gk = _inv(run)
                if table.index_of(gk) != last:
                    continue
                tup = chosen + [gk]
                perms = [Permutation._raw(t) for t in tup]
                if not PermGroup(perms, n).is_transitive():
                    continue
                if _generated_order(perms, n, order, G.seed) != order:
                    continue
                return REALIZED, gen_tuple(perms, action), nodes
            for h in reversed(pools[depth]):
                stack.append((depth + 1, _mul(run, h), chosen + [h]))
    return REFUTED_SEARCH, None, nodes


def genus_screen(action: Action, g=0, insoluble=False, kmax=8, search=True,
                 budget=None, config=None) -> GenusScreen:
    """Screen order signatures for a genus-g generating tuple.

    Signatures d_1 <= ... <= d_k (2 <= k <= kmax) are extended while the
    sum of minimal indices stays at most 2(n + g - 1); the first extension
    past it is recorded as refuted by index.  With ``insoluble`` set the
    caller asserts the group is insoluble and not Alt(5), which licenses the
    85/42 filter.  Survivors are then searched for explicit witnesses.
    """
    config = config or get_config()
    budget = config.budget if budget is None else budget
    if not action.transitive:
        raise GenusError("the genus screen needs a transitive action")
    if g < 0:
        raise ValueError("genus must be non-negative")
    table = class_table(action.group, config)
    mins = min_index_table(action, table)
    n = action.degree
    T = 2 * (n + g - 1)
    orders = sorted(mins)
    screen = GenusScreen(action, g, T, mins, insoluble, kmax)
    sigs = []

    def extend(sig, s):
        start = orders.index(sig[-1]) if sig else 0
        for d in orders[start:]:
            new, ns = sig + (d,), s + mins[d]
            if ns > T:
                if len(new) >= 2:
                    sigs.append((new, ns, REFUTED_INDEX))
                continue
            if len(new) >= 2:
                sigs.append((new, ns, None))
            if len(new) < kmax:
                extend(new, ns)

    extend((), 0)
    sigs.sort(key=lambda t: (len(t[0]), t[0]))
    cache = {}

    def members(c):
        if c not in cache:
            rows, _ = conjugation_orbit(action.group, table[c].rep, cap=config.caps.class_enumeration)
            cache[c] = [tuple(int(a) for a in r) for r in rows]
        return cache[c]

    for sig, s, status in sigs:
        ratio = sum((Fraction(d - 1, d) for d in sig), Fraction(0))
        entry = ScreenEntry(sig, status or UNDECIDED, s, ratio)
        if status is None and insoluble and ratio < HURWITZ_BOUND:
            entry.status = REFUTED_8542
        if entry.status == UNDECIDED and search:
            try:
                entry.status, entry.witness, entry.nodes = _realize(
                    action, table, sig, T, budget, members)
            except _Budget as exc:
                entry.nodes = exc.args[0]
        screen.entries.append(entry)
    return screen
