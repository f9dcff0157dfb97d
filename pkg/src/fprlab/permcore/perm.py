"""Permutations of {0, ..., n-1} stored as image tuples.

Points are 0-indexed internally.  Cycle notation (parsing and printing) is
1-indexed.  Products act on the right: ``p * q`` first applies ``p`` and
then ``q``, so ``(p * q)(a) == q(p(a))``, matching exponent notation a^(pq).
"""
from __future__ import annotations

import math
import re
from functools import reduce

from ..errors import DegreeMismatch, NotAPermutation


def _compose(p, q):
    return tuple(map(q.__getitem__, p))


def _invert(p):
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


class Permutation:
    __slots__ = ("images", "_hash")

    def __init__(self, images):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise NotAPermutation(f"not a bijection of 0..{len(images) - 1}: {images}")
        if not images:
            raise NotAPermutation("degree must be positive")
        self.images = images
        self._hash = None

    @classmethod
    def _raw(cls, images):
        p = object.__new__(cls)
        p.images = images
        p._hash = None
        return p

    @classmethod
    def identity(cls, degree):
        return cls._raw(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, cycles, degree):
        """Build from an iterable of 0-indexed cycles."""
        img = list(range(degree))
        seen = set()
        for cyc in cycles:
            cyc = list(cyc)
            for a in cyc:
                if not 0 <= a < degree:
                    raise NotAPermutation(f"point {a + 1} outside 1..{degree}")
                if a in seen:
                    raise NotAPermutation("cycles are not disjoint")
                seen.add(a)
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                img[a] = b
        return cls._raw(tuple(img))

    @classmethod
    def parse(cls, text, degree=None):
        """Parse 1-indexed cycle notation such as ``(1,2,3)(4,5)``.

        Disjointness is not required: cycles are multiplied left to right.
        """
        cycles = parse_cycles(text)
        top = max((max(c) for c in cycles if c), default=0) + 1
        if degree is None:
            degree = max(top, 1)
        elif top > degree:
            raise NotAPermutation(f"point {top} exceeds degree {degree} in {text!r}")
        perms = [cls.from_cycles([c], degree) for c in cycles if c]
        return reduce(lambda a, b: a * b, perms, cls.identity(degree))

    @property
    def degree(self):
        return len(self.images)

    def __call__(self, a):
        return self.images[a]

    def __getitem__(self, a):
        return self.images[a]

    def __len__(self):
        return len(self.images)

    def __iter__(self):
        return iter(self.images)

    def __mul__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        if len(other.images) != len(self.images):
            raise DegreeMismatch(f"degrees {self.degree} and {other.degree} differ")
        return Permutation._raw(_compose(self.images, other.images))

    def __invert__(self):
        return Permutation._raw(_invert(self.images))

    inverse = __invert__

    def __pow__(self, k):
        if k < 0:
            return (~self) ** (-k)
        result = Permutation.identity(self.degree)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self, g):
        """Return g^-1 * self * g."""
        return ~g * self * g

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other):
        return self.images < other.images

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.images)
        return self._hash

    def is_identity(self):
        return all(i == x for i, x in enumerate(self.images))

    def fixed_points(self):
        return {i for i, x in enumerate(self.images) if i == x}

    def num_fixed(self):
        return sum(1 for i, x in enumerate(self.images) if i == x)

    def support(self):
        return {i for i, x in enumerate(self.images) if i != x}

    def cycles(self, include_fixed=False):
        """Disjoint cycles as 0-indexed tuples, each starting at its least point."""
        seen = [False] * len(self.images)
        out = []
        for i in range(len(self.images)):
            if seen[i]:
                continue
            cyc = [i]
            seen[i] = True
            j = self.images[i]
            while j != i:
                seen[j] = True
                cyc.append(j)
                j = self.images[j]
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        return out

    def cycle_type(self):
        """Sorted cycle lengths, fixed points included."""
        return tuple(sorted(len(c) for c in self.cycles(include_fixed=True)))

    def num_cycles(self):
        return len(self.cycles(include_fixed=True))

    def order(self):
        return reduce(math.lcm, (len(c) for c in self.cycles()), 1)

    def is_even(self):
        return sum(len(c) - 1 for c in self.cycles()) % 2 == 0

    def to_cycles(self):
        """1-indexed disjoint-cycle string; the identity prints as ``()``."""
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + ",".join(str(a + 1) for a in c) + ")" for c in cyc)

    def __repr__(self):
        return f"Permutation({self.to_cycles()}, degree={self.degree})"

    __str__ = to_cycles


_CYCLE_RE = re.compile(r"\(\s*(\d+(?:\s*[,\s]\s*\d+)*)?\s*\)")


def parse_cycles(text):
    """Split cycle notation into 0-indexed cycles; raises on junk."""
    text = text.strip()
    cycles = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _CYCLE_RE.match(text, pos)
        if not m:
            raise NotAPermutation(f"cannot parse cycle notation {text!r} at offset {pos}")
        if m.group(1):
            pts = [int(t) - 1 for t in re.split(r"[,\s]+", m.group(1).strip())]
            if min(pts) < 0:
                raise NotAPermutation("points are numbered from 1")
            if len(set(pts)) != len(pts):
                raise NotAPermutation(f"repeated point in cycle {m.group(0)}")
            cycles.append(pts)
        pos = m.end()
    return cycles


def split_generators(text):
    """Split ``(1,2,3),(1,2)(3,5)`` into per-generator cycle strings.

    Commas at parenthesis depth 0 separate generators.
    """
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur).strip())
            cur = []
        else:
            cur.append(ch)
    tail = "".join(cur).strip()
    if tail or parts:
        parts.append(tail)
    return [p for p in parts if p]


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Left-to-right product: the result maps a to q(p(a))."""
    return p * q


def inverse(p: Permutation) -> Permutation:
    return ~p


def fixed_points(p: Permutation):
    return p.fixed_points()
