"""Group/action spec strings.

Grammar (whitespace allowed only around the whole string)::

    spec    := group ['@' action]
    group   := ('sym' | 'alt' | 'cyclic' | 'dihedral') ':' INT
             | 'perm' ':' INT ':' GENS
             | ('gl' | 'sl' | 'pgl' | 'psl' | 'sp') ':' INT ':' INT
             | 'wreath' ':' group ':' group
    action  := 'natural' | 'regular' | 'product' | 'projective' | 'vectors'
             | ('ksets' | 'tuples' | 'subspaces') ':' INT
             | 'cosets' ':' GENS
             | 'forms' ':' ('minus' | 'plus')

GENS is a comma-separated list of permutations in 1-indexed cycle notation,
for example ``(1,2,3,4,5),(1,2)(3,5)``.  ``dihedral:m`` is the dihedral
group of order m.  Without an action, permutation groups act naturally and
matrix groups on projective points.  :func:`format_spec` prints the
canonical form, which parses back to the same value.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from ..errors import FprlabError, SpecSemanticError, SpecSyntaxError
from ..fflinalg.classical import build_classical
from ..fflinalg.field import prime_power
from ..permcore.actions import MATRIX_KINDS, ActionSpec, realize
from ..permcore.group import PermGroup
from ..permcore.named import WreathProduct, alternating, cyclic, dihedral, symmetric
from ..permcore.perm import Permutation, split_generators

PERM_GROUPS = ("sym", "alt", "cyclic", "dihedral")
MATRIX_GROUPS = ("gl", "sl", "pgl", "psl", "sp")
GEN_CHARS = set("0123456789(), ")


@dataclass(frozen=True)
class GroupSpec:
    kind: str
    args: tuple = ()
    gens: Optional[str] = None          # canonical generator text, perm groups only
    parts: tuple = ()                   # (inner, outer) for wreath products

    @property
    def is_matrix(self):
        return self.kind in MATRIX_GROUPS

    def degree(self):
        """Degree of the natural permutation representation, if there is one."""
        if self.kind in ("sym", "alt", "cyclic"):
            return self.args[0]
        if self.kind == "dihedral":
            m = self.args[0] // 2
            return {1: 2, 2: 4}.get(m, m)
        if self.kind == "perm":
            return self.args[0]
        if self.kind == "wreath":
            return self.parts[0].degree() * self.parts[1].degree()
        return None


class _Parser:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def error(self, msg, pos=None):
        raise SpecSyntaxError(msg, self.text, self.pos if pos is None else pos)

    def peek(self):
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def word(self):
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isalpha():
            self.pos += 1
        if start == self.pos:
            self.error("expected a name")
        return self.text[start:self.pos]

    def expect(self, ch):
        if self.peek() != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1

    def integer(self):
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected an integer")
        return int(self.text[start:self.pos])

    def gens(self, degree):
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] in GEN_CHARS:
            self.pos += 1
        raw = self.text[start:self.pos]
        if not raw.strip():
            self.error("expected generators in cycle notation", start)
        try:
            perms = [Permutation.parse(t, degree) for t in split_generators(raw)]
        except FprlabError as exc:
            raise SpecSyntaxError(f"bad generators ({exc})", self.text, start) from None
        if not perms:
            self.error("expected generators in cycle notation", start)
        return ",".join(p.to_cycles() for p in perms)

    def group(self):
        start = self.pos
        kind = self.word()
        if kind in PERM_GROUPS:
            self.expect(":")
            n = self.integer()
            return GroupSpec(kind, (n,))
        if kind == "perm":
            self.expect(":")
            n = self.integer()
            if n < 1:
                self.error("degree must be positive", start)
            self.expect(":")
            return GroupSpec(kind, (n,), self.gens(n))
        if kind in MATRIX_GROUPS:
            self.expect(":")
            n = self.integer()
            self.expect(":")
            q = self.integer()
            return GroupSpec(kind, (n, q))
        if kind == "wreath":
            self.expect(":")
            inner = self.group()
            self.expect(":")
            outer = self.group()
            return GroupSpec(kind, (), None, (inner, outer))
        self.error(f"unknown group {kind!r}", start)

    def action(self, degree):
        kind = self.word()
        if kind in ("ksets", "tuples", "subspaces"):
            self.expect(":")
            return ActionSpec(kind, k=self.integer())
        if kind == "cosets":
            self.expect(":")
            return ActionSpec(kind, subgroup=self.gens(degree))
        if kind == "forms":
            self.expect(":")
            at = self.pos
            sign = self.word()
            if sign not in ("minus", "plus"):
                self.error("expected minus or plus", at)
            return ActionSpec(kind, sign=sign)
        if kind in ("natural", "regular", "product", "projective", "vectors"):
            return ActionSpec(kind)
        self.error(f"unknown action {kind!r}", self.pos - len(kind))


def _check_group(g: GroupSpec):
    if g.kind == "wreath":
        for p in g.parts:
            if p.is_matrix:
                raise SpecSemanticError("wreath products take permutation groups")
            _check_group(p)
        return
    if g.kind in PERM_GROUPS + ("perm",) and g.args[0] < 1:
        raise SpecSemanticError(f"{g.kind} needs a positive parameter")
    if g.kind == "dihedral" and g.args[0] % 2:
        raise SpecSemanticError("dihedral order must be even")
    if g.is_matrix:
        n, q = g.args
        try:
            prime_power(q)
        except (ValueError, FprlabError):
            raise SpecSemanticError(f"{q} is not a prime power") from None
        if n < 1 or (g.kind == "sp" and n % 2) or (g.kind in ("sl", "psl") and n < 2):
            raise SpecSemanticError(f"bad dimension {n} for {g.kind}")


def _check_action(g: GroupSpec, a: ActionSpec):
    if g.is_matrix != (a.kind in MATRIX_KINDS):
        raise SpecSemanticError(f"action {a} does not apply to {format_group(g)}")
    if a.kind == "product" and g.kind != "wreath":
        raise SpecSemanticError("the product action needs a wreath product")
    n = g.args[0] if g.is_matrix else g.degree()
    if a.kind == "ksets" and not a.k < n:
        raise SpecSemanticError(f"ksets:{a.k} needs k < {n}")
    if a.kind == "tuples" and not a.k <= n:
        raise SpecSemanticError(f"tuples:{a.k} needs k <= {n}")
    if a.kind == "subspaces" and not a.k < n:
        raise SpecSemanticError(f"subspaces:{a.k} needs k < {n}")
    if a.kind == "forms" and (g.kind != "sp" or g.args[1] % 2):
        raise SpecSemanticError("forms needs sp with q even")


def parse_spec(text: str):
    """Parse ``group[@action]`` into (GroupSpec, ActionSpec)."""
    p = _Parser(text.strip())
    g = p.group()
    if p.peek() == "@":
        p.pos += 1
        a = p.action(g.degree())
    elif p.peek():
        p.error("expected '@' or end of input")
    else:
        a = ActionSpec("projective" if g.is_matrix else "natural")
    if p.peek():
        p.error("unexpected trailing text")
    _check_group(g)
    _check_action(g, a)
    return g, a


def format_group(g: GroupSpec) -> str:
    if g.kind == "wreath":
        return f"wreath:{format_group(g.parts[0])}:{format_group(g.parts[1])}"
    if g.kind == "perm":
        return f"perm:{g.args[0]}:{g.gens}"
    return ":".join([g.kind] + [str(a) for a in g.args])


def format_spec(g: GroupSpec, a: ActionSpec) -> str:
    return f"{format_group(g)}@{a}"


def build_group(g: GroupSpec, config=None):
    if g.kind == "sym":
        return symmetric(g.args[0])
    if g.kind == "alt":
        return alternating(g.args[0])
    if g.kind == "cyclic":
        return cyclic(g.args[0])
    if g.kind == "dihedral":
        return dihedral(g.args[0])
    if g.kind == "perm":
        return PermGroup.from_cycles(g.args[0], g.gens, name=format_group(g))
    if g.kind == "wreath":
        inner, outer = (build_group(p, config) for p in g.parts)
        return WreathProduct(inner, outer)
    return build_classical(g.kind, g.args[0], g.args[1], config)


def load(text: str, config=None):
    """Parse and realize a spec string; returns the Action."""
    g, a = parse_spec(text)
    act = realize(build_group(g, config), a, config)
    act.meta.setdefault("spec", format_spec(g, a))
    return act
