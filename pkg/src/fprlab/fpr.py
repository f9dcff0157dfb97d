"""Fixed point ratios and the invariants built from them.

fpr(x) = |fix(x)| / |Omega| is constant on conjugacy classes, so reports are
computed from class representatives only.  Two further routes give the same
numbers and are kept separate for cross-checking: the fusion count
|x^G ∩ H| / |x^G| for a point stabilizer H, and q^(d-n) for matrices acting
on vectors.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .classes import ClassTable, ConjClass, class_table, fusion_count
from .config import get_config
from .errors import MembershipError, NotTransitive
from .fflinalg import matrix as Mx
from .permcore.actions import Action
from .permcore.group import PermGroup
from .permcore.perm import Permutation


@dataclass(frozen=True)
class FprRow:
    index: int
    rep: Permutation
    order: int
    size: int
    fix: int
    fpr: Fraction


@dataclass
class FprReport:
    name: str
    degree: int
    group_order: int
    rows: list
    max_fpr: Fraction
    min_fpr: Fraction
    max_fpr_prime: Fraction
    mu: int
    fixity: int
    involution_fixity: int
    has_involutions: bool
    has_derangement: bool
    derangement_witness: Optional[FprRow]
    seed: int = field(default_factory=lambda: get_config().seed)

    def row_for_order(self, order):
        return [r for r in self.rows if r.order == order]

    def fpr_by_order(self):
        """Element order -> sorted set of fpr values seen at that order."""
        out = {}
        for r in self.rows:
            out.setdefault(r.order, set()).add(r.fpr)
        return {d: sorted(v) for d, v in sorted(out.items())}


def _as_perm(action: Action, x):
    p = x if isinstance(x, Permutation) else action.induce(x)
    if p.degree != action.degree or not action.group.contains(p):
        raise MembershipError(f"{x!r} is not in the acting group")
    return p


def fix_count(action: Action, x) -> int:
    return _as_perm(action, x).num_fixed()


def fpr_direct(action: Action, x) -> Fraction:
    """|C_Omega(x)| / |Omega| for x in the acting group (or a source element)."""
    return Fraction(fix_count(action, x), action.degree)


def fpr_fusion(G: PermGroup, H: PermGroup, C: ConjClass, method="auto") -> Fraction:
    """|x^G ∩ H| / |x^G|: the fpr of C on the cosets of H."""
    return Fraction(fusion_count(G, H, C, method=method), C.size)


def fpr_vectors(F, x) -> Fraction:
    """q^(d - n) with d the dimension of the fixed space of the matrix x."""
    n = x.shape[0]
    d = Mx.fixed_space_dim(F, x)
    return Fraction(F.q) ** (d - n)


def fpr_report(action: Action, table: ClassTable = None, name=None) -> FprReport:
    G = action.group
    table = table or class_table(G)
    n = action.degree
    rows = []
    for i, c in enumerate(table):
        f = c.rep.num_fixed()
        rows.append(FprRow(i, c.rep, c.order, c.size, f, Fraction(f, n)))
    nontriv = [r for r in rows if r.order > 1]
    if not nontriv:
        # trivial group: no non-identity element, conventions below are vacuous
        one = Fraction(1)
        return FprReport(name or action.name, n, G.order(), rows, one, one, one, 0, n, 0,
                         False, False, None)
    max_fpr = max(r.fpr for r in nontriv)
    min_fpr = min(r.fpr for r in nontriv)
    prime = [r for r in nontriv if r.index in table.prime_order_indices]
    max_fpr_prime = max(r.fpr for r in prime)
    fixity = max(r.fix for r in nontriv)
    inv = [r for r in nontriv if r.order == 2]
    inv_fix = max((r.fix for r in inv), default=0)
    der = next((r for r in nontriv if r.fix == 0), None)
    return FprReport(name or action.name, n, G.order(), rows, max_fpr, min_fpr, max_fpr_prime,
                     n - fixity, fixity, inv_fix, bool(inv), der is not None, der)


def minimal_degree(action: Action) -> int:
    return fpr_report(action).mu


def fixity(action: Action) -> int:
    return fpr_report(action).fixity


def involution_fixity(action: Action):
    """(largest fixed-point count of an involution, whether involutions exist).

    With no involutions the count is 0 and the flag says why.
    """
    rep = fpr_report(action)
    return rep.involution_fixity, rep.has_involutions


def has_derangement(action: Action):
    """(True, witness class row) if some element fixes no point."""
    rep = fpr_report(action)
    return rep.has_derangement, rep.derangement_witness


def orbit_count(p: Permutation) -> int:
    return len(p.cycles(include_fixed=True))


# the 4/(3q) bound ----------------------------------------------------------

DEFAULT_EXCEPTIONS = ("PSL(4,2)", "PSp(4,3)", "POmega-(4,3)")


@dataclass
class Check43q:
    name: str
    q: int
    socle: Optional[str]
    bound: Fraction
    max_fpr: Fraction
    passed: bool
    applicable: bool
    listed_exception: bool
    witnesses: list

    @property
    def consistent(self):
        """True unless the bound fails for a group that is not a listed exception."""
        return self.passed or not self.applicable or self.listed_exception


def check_43q(action: Action, q=None, socle=None, exceptions=DEFAULT_EXCEPTIONS) -> Check43q:
    """Compare max fpr over non-identity elements with 4/(3q).

    ``q`` and ``socle`` default to the action's Lie tag.  Socle PSL2(q) is
    outside the statement, so such actions are marked not applicable.
    """
    if not action.transitive:
        raise NotTransitive("the 4/(3q) comparison needs a transitive action")
    tag = action.lie
    if q is None:
        if tag is None:
            raise ValueError("action has no field size; pass q explicitly")
        q = tag.q
    if socle is None and tag is not None:
        socle = tag.socle_name()
    applicable = not (socle or "").startswith("PSL(2,")
    rep = fpr_report(action)
    bound = Fraction(4, 3 * q)
    wit = [r for r in rep.rows if r.order > 1 and r.fpr > bound]
    return Check43q(action.name, q, socle, bound, rep.max_fpr, not wit, applicable,
                    socle in exceptions, wit)
