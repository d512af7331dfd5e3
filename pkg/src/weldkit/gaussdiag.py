"""Welded knot diagrams as signed Gauss codes over their classical crossings.

Welded crossings impose no relations and do not delimit arcs, so they are
simply absent from the code: welding a crossing deletes both of its passes.
"""

from __future__ import annotations

import re
from collections.abc import Iterable
from dataclasses import dataclass, field
from functools import cached_property
from typing import NamedTuple

from . import _kernels
from .errors import (
    CrossingCountNotTwo,
    DuplicateRole,
    MalformedToken,
    SignMismatch,
    UnknownCrossing,
)

OVER = "O"
UNDER = "U"

_TOKEN = re.compile(r"^([OU])([1-9][0-9]*)([+\-−])$")


class Pass(NamedTuple):
    crossing: int
    role: str

    def __str__(self):
        return f"{self.role}{self.crossing}"


class Arc(NamedTuple):
    """Stretch of the code between two consecutive under passes.

    ``start`` is the position of the under pass the arc leaves, ``end`` the
    position of the under pass it runs into. For the empty diagram the single
    closed arc is ``Arc(0, 0)``.
    """

    start: int
    end: int


def pack(label: int, role: str, sign: int) -> int:
    return (label << 2) | ((role == UNDER) << 1) | (sign < 0)


def unpack(token: int) -> tuple[int, str, int]:
    return token >> 2, UNDER if token & 2 else OVER, -1 if token & 1 else 1


@dataclass(frozen=True, eq=False)
class WeldedDiagram:
    """A welded knot diagram, stored by its classical-crossing Gauss code.

    Equality and hashing go through the canonical form, so two diagrams that
    differ only by rotation of the code or relabeling of crossings compare
    equal. ``welded_history`` is provenance only and never affects equality.
    """

    code: tuple[Pass, ...] = ()
    signs: dict[int, int] = field(default_factory=dict)
    welded_history: tuple[int, ...] = ()

    def __post_init__(self):
        _validate(self.code, self.signs)

    @classmethod
    def from_tokens(cls, tokens: Iterable[int], welded_history=()) -> WeldedDiagram:
        code = []
        signs = {}
        for t in tokens:
            lab, role, sign = unpack(t)
            code.append(Pass(lab, role))
            signs[lab] = sign
        return cls(tuple(code), signs, tuple(welded_history))

    @cached_property
    def tokens(self) -> tuple[int, ...]:
        return tuple(pack(p.crossing, p.role, self.signs[p.crossing]) for p in self.code)

    @cached_property
    def canonical_tokens(self) -> tuple[int, ...]:
        return _kernels.canonical_form(self.tokens)

    @property
    def crossings(self) -> list[int]:
        """Crossing labels in order of first appearance."""
        seen = []
        for p in self.code:
            if p.crossing not in seen:
                seen.append(p.crossing)
        return seen

    @property
    def crossing_count(self) -> int:
        return len(self.code) // 2

    def __len__(self):
        return len(self.code)

    def __eq__(self, other):
        if not isinstance(other, WeldedDiagram):
            return NotImplemented
        return self.canonical_tokens == other.canonical_tokens

    def __hash__(self):
        return hash(self.canonical_tokens)

    def __str__(self):
        return format_code(self)

    def __repr__(self):
        return f"WeldedDiagram({format_code(self)!r})"


def _validate(code, signs):
    seen: dict[int, str] = {}
    counts: dict[int, int] = {}
    for p in code:
        if p.crossing < 1:
            raise MalformedToken(str(p))
        counts[p.crossing] = counts.get(p.crossing, 0) + 1
        if counts[p.crossing] > 2:
            raise CrossingCountNotTwo(p.crossing, counts[p.crossing])
        if seen.get(p.crossing) == p.role:
            raise DuplicateRole(p.crossing)
        seen[p.crossing] = p.role
    for lab, c in counts.items():
        if c != 2:
            raise CrossingCountNotTwo(lab, c)
    if set(signs) != set(counts):
        missing = set(counts) ^ set(signs)
        raise SignMismatch(min(missing))
    for lab, s in signs.items():
        if s not in (1, -1):
            raise SignMismatch(lab)


def parse(text: str) -> WeldedDiagram:
    """Parse whitespace-separated ``O<k><s>`` / ``U<k><s>`` tokens.

    >>> parse("O1+ U1+").crossing_count
    1
    """
    code = []
    signs: dict[int, int] = {}
    roles: dict[int, str] = {}
    counts: dict[int, int] = {}
    for tok in text.split():
        m = _TOKEN.match(tok)
        if m is None:
            raise MalformedToken(tok)
        role, lab, s = m.group(1), int(m.group(2)), m.group(3)
        sign = 1 if s == "+" else -1
        counts[lab] = counts.get(lab, 0) + 1
        if counts[lab] > 2:
            raise CrossingCountNotTwo(lab, counts[lab])
        if lab in roles:
            if roles[lab] == role:
                raise DuplicateRole(lab)
            if signs[lab] != sign:
                raise SignMismatch(lab)
        roles[lab] = role
        signs[lab] = sign
        code.append(Pass(lab, role))
    for lab, c in counts.items():
        if c != 2:
            raise CrossingCountNotTwo(lab, c)
    return WeldedDiagram(tuple(code), signs)


def _format_tokens(tokens) -> str:
    parts = []
    for t in tokens:
        lab, role, sign = unpack(t)
        parts.append(f"{role}{lab}{'+' if sign > 0 else '-'}")
    return " ".join(parts)


def format_code(d: WeldedDiagram) -> str:
    """The code as stored, without canonicalization."""
    return _format_tokens(d.tokens)


def serialize(d: WeldedDiagram) -> str:
    """Canonical text form: canonical rotation, labels 1..n, single spaces."""
    return _format_tokens(d.canonical_tokens)


def canonicalize(d: WeldedDiagram) -> WeldedDiagram:
    return WeldedDiagram.from_tokens(d.canonical_tokens, d.welded_history)


def rotate(d: WeldedDiagram, k: int) -> WeldedDiagram:
    if not d.code:
        return d
    k %= len(d.code)
    return WeldedDiagram(d.code[k:] + d.code[:k], dict(d.signs), d.welded_history)


def relabel(d: WeldedDiagram, mapping: dict[int, int]) -> WeldedDiagram:
    code = tuple(Pass(mapping[p.crossing], p.role) for p in d.code)
    signs = {mapping[k]: s for k, s in d.signs.items()}
    return WeldedDiagram(code, signs, d.welded_history)


def reverse(d: WeldedDiagram) -> WeldedDiagram:
    """Orientation reversal.

    Both strands through every crossing reverse together, so crossing signs
    are unchanged; only the traversal order flips.
    """
    return WeldedDiagram(tuple(reversed(d.code)), dict(d.signs), d.welded_history)


def weld(d: WeldedDiagram, c: int) -> WeldedDiagram:
    if c not in d.signs:
        raise UnknownCrossing(c)
    code = tuple(p for p in d.code if p.crossing != c)
    signs = {k: s for k, s in d.signs.items() if k != c}
    return WeldedDiagram(code, signs, d.welded_history + (c,))


def weld_set(d: WeldedDiagram, labels: Iterable[int]) -> WeldedDiagram:
    labels = sorted(set(labels))
    for c in labels:
        if c not in d.signs:
            raise UnknownCrossing(c)
    for c in labels:
        d = weld(d, c)
    return d


def arcs(d: WeldedDiagram) -> list[Arc]:
    """Arcs in traversal order; arc 0 is the one containing position 0."""
    unders = [i for i, p in enumerate(d.code) if p.role == UNDER]
    if not unders:
        return [Arc(0, 0)]
    k = len(unders)
    return [Arc(unders[j - 1], unders[j]) if j else Arc(unders[-1], unders[0]) for j in range(k)]


def arc_indices(d: WeldedDiagram) -> list[int]:
    """Arc index of every position; an under pass gets the arc it arrives on."""
    k = sum(1 for p in d.code if p.role == UNDER)
    out = []
    seen = 0
    for p in d.code:
        out.append(seen % k if k else 0)
        if p.role == UNDER:
            seen += 1
    return out


def supporting_genus(d: WeldedDiagram) -> int:
    """Genus of the closed surface carrying the diagram; 0 iff the code is
    realised by a planar (classical) diagram.

    Each crossing is a 4-valent vertex with counter-clockwise rotation
    over-out, under-out, over-in, under-in when positive (under-out,
    over-out, under-in, over-in when negative); faces are traced on the
    resulting ribbon graph.
    """
    n = len(d.code)
    if n == 0:
        return 0
    where = {(p.crossing, p.role): i for i, p in enumerate(d.code)}
    rot = {}
    for c in d.crossings:
        o, u = where[(c, OVER)], where[(c, UNDER)]
        if d.signs[c] > 0:
            order = [(o, 1), (u, 1), (o, 0), (u, 0)]
        else:
            order = [(u, 1), (o, 1), (u, 0), (o, 0)]
        for k, h in enumerate(order):
            rot[h] = order[(k + 1) % 4]

    def across(h):
        # half-edge (i, 1) leaves pass i; (i, 0) enters it
        i, out = h
        return ((i + 1) % n, 0) if out else ((i - 1) % n, 1)

    seen = set()
    faces = 0
    for start in rot:
        if start in seen:
            continue
        faces += 1
        h = start
        while h not in seen:
            seen.add(h)
            h = rot[across(h)]
    v = d.crossing_count
    return (2 - v + 2 * v - faces) // 2


EMPTY = WeldedDiagram()
