"""Independent reference implementations used as test oracles.

Nothing here calls into weldkit's algebra: arcs are recomputed by walking the
code, colorings are enumerated exhaustively, and canonical forms are taken as
the minimum over every rotation.
"""

from __future__ import annotations

import itertools

import numpy as np
from hypothesis import strategies as st

from weldkit.gaussdiag import Pass, WeldedDiagram


def arc_data(code):
    """(over, in, out) arc indices per crossing, by walking the code."""
    k = sum(1 for p in code if p.role == "U")
    cur = 0
    over, under = {}, {}
    for p in code:
        if p.role == "O":
            over[p.crossing] = cur
        else:
            under[p.crossing] = (cur, (cur + 1) % k)
            cur = (cur + 1) % k
    return [(over[c], *under[c]) for c in over], max(k, 1)


def brute_colorings(d: WeldedDiagram, m: int) -> int:
    """Count Fox m-colorings by enumerating every assignment of colors to arcs."""
    rows, k = arc_data(d.code)
    if not rows:
        return m
    cols = np.array(list(itertools.product(range(m), repeat=k)), dtype=np.int64)
    ok = np.ones(len(cols), dtype=bool)
    for a, b, c in rows:
        ok &= (cols[:, c] - 2 * cols[:, a] + cols[:, b]) % m == 0
    return int(ok.sum())


def brute_canonical(d: WeldedDiagram) -> tuple:
    """Minimum over all rotations of the first-appearance relabeled code,
    each pass written (label, role bit, sign bit)."""
    n = len(d.code)
    if n == 0:
        return ()
    best = None
    for r in range(n):
        rot = d.code[r:] + d.code[:r]
        names = {}
        word = []
        for p in rot:
            lab = names.setdefault(p.crossing, len(names) + 1)
            word.append((lab, 0 if p.role == "O" else 1, 0 if d.signs[p.crossing] > 0 else 1))
        word = tuple(word)
        if best is None or word < best:
            best = word
    return best


def closed_braid(strands, word) -> WeldedDiagram:
    """Closure of a braid word; in sigma_i the strand from position i is over."""
    code, signs = [], {}
    pos = 0
    for _ in range(strands):
        for k, g in enumerate(word, start=1):
            i, e = abs(g) - 1, (1 if g > 0 else -1)
            if pos == i:
                code.append(Pass(k, "O" if e > 0 else "U"))
                pos = i + 1
            elif pos == i + 1:
                code.append(Pass(k, "U" if e > 0 else "O"))
                pos = i
            signs[k] = e
        if pos == 0:
            break
    assert len(code) == 2 * len(word), "closure is not a knot"
    return WeldedDiagram(tuple(code), signs)


def all_codes(n):
    """Every Gauss code on n crossings with a fixed first label order, all
    role choices, positive signs (colorings ignore signs)."""

    def words(seq, opened, nxt):
        if len(seq) == 2 * n:
            yield tuple(seq)
            return
        if nxt <= n:
            yield from words(seq + [nxt], opened | {nxt}, nxt + 1)
        for lab in sorted(opened):
            yield from words(seq + [lab], opened - {lab}, nxt)

    for w in words([], frozenset(), 1):
        for roles in itertools.product("OU", repeat=n):
            first = set()
            code = []
            for lab in w:
                r = roles[lab - 1]
                if lab in first:
                    r = "U" if r == "O" else "O"
                first.add(lab)
                code.append(Pass(lab, r))
            yield WeldedDiagram(tuple(code), {i: 1 for i in range(1, n + 1)})


@st.composite
def diagrams(draw, max_crossings=8, min_crossings=0):
    n = draw(st.integers(min_crossings, max_crossings))
    labels = draw(st.permutations([c for c in range(1, n + 1) for _ in range(2)]))
    over_first = draw(st.lists(st.booleans(), min_size=n, max_size=n))
    signs = draw(st.lists(st.sampled_from([1, -1]), min_size=n, max_size=n))
    seen = set()
    code = []
    for lab in labels:
        first = lab not in seen
        seen.add(lab)
        code.append(Pass(lab, "O" if first == over_first[lab - 1] else "U"))
    return WeldedDiagram(tuple(code), {i + 1: signs[i] for i in range(n)})


def coloring_systems(max_crossings):
    """One representative diagram per distinct arc-constraint system over
    every code with at most ``max_crossings`` crossings."""
    systems = {}
    for n in range(max_crossings + 1):
        for d in all_codes(n):
            rows, k = arc_data(d.code)
            systems.setdefault((k, tuple(sorted(rows))), d)
    return systems


class BruteColoringCounter:
    """Exhaustive Fox coloring counts for a fixed modulus.

    Arc 0 is pinned to color 0 (adding a constant to every arc maps
    colorings to colorings), and the solution set of every single relation
    is tabulated once per arc count.
    """

    def __init__(self, m):
        self.m = m
        self._tables = {}

    def _table(self, k):
        if k not in self._tables:
            m = self.m
            free = np.array(list(itertools.product(range(m), repeat=k - 1)), dtype=np.int64)
            cols = np.hstack(
                [np.zeros((len(free), 1), dtype=np.int64), free.reshape(len(free), k - 1)]
            )
            self._tables[k] = {
                (a, b, c): (cols[:, c] - 2 * cols[:, a] + cols[:, b]) % m == 0
                for a in range(k)
                for b in range(k)
                for c in range(k)
            }
        return self._tables[k]

    def count(self, k, rows):
        if not rows:
            return self.m
        tab = self._table(k)
        return self.m * int(np.logical_and.reduce([tab[r] for r in rows]).sum())


def random_diagram(rng, max_crossings=8, min_crossings=0):
    """Uniform Gauss word, random roles and signs (seeded ``random.Random``)."""
    n = rng.randint(min_crossings, max_crossings)
    labels = [c for c in range(1, n + 1) for _ in range(2)]
    rng.shuffle(labels)
    over_first = [rng.random() < 0.5 for _ in range(n)]
    seen = set()
    code = []
    for lab in labels:
        first = lab not in seen
        seen.add(lab)
        code.append(Pass(lab, "O" if first == over_first[lab - 1] else "U"))
    return WeldedDiagram(tuple(code), {c: rng.choice((1, -1)) for c in range(1, n + 1)})
