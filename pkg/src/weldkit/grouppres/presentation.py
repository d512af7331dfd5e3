"""Finitely presented groups, Wirtinger presentations and Tietze simplification.

Words are tuples of nonzero ints: letter ``i + 1`` is generator ``i`` and
``-(i + 1)`` its inverse.
"""

from __future__ import annotations

import json
from collections.abc import Sequence
from dataclasses import dataclass

from ..gaussdiag import UNDER, WeldedDiagram, arc_indices

Word = tuple


def free_reduce(word) -> tuple:
    out: list[int] = []
    for x in word:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def cyclic_reduce(word) -> tuple:
    w = free_reduce(word)
    i, j = 0, len(w) - 1
    while i < j and w[i] == -w[j]:
        i += 1
        j -= 1
    return w[i : j + 1]


def inverse(word) -> tuple:
    return tuple(-x for x in reversed(word))


def cyclic_key(word) -> tuple:
    """Representative of the cyclic word and its inverse, for deduplication."""
    if not word:
        return ()
    cands = []
    for w in (word, inverse(word)):
        n = len(w)
        cands.extend(w[k:] + w[:k] for k in range(n))
    return min(cands)


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relators: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.generators)
        for r in self.relators:
            for x in r:
                if x == 0 or abs(x) > n:
                    raise ValueError(f"letter {x} out of range for {n} generators")

    @property
    def rank(self):
        return len(self.generators)

    def word_pairs(self):
        """Relators as lists of ``(generator index, exponent)`` pairs."""
        return [[(abs(x) - 1, 1 if x > 0 else -1) for x in r] for r in self.relators]

    def exponent_matrix(self):
        m = []
        for r in self.relators:
            row = [0] * self.rank
            for x in r:
                row[abs(x) - 1] += 1 if x > 0 else -1
            m.append(row)
        return m

    def total_length(self):
        return sum(len(r) for r in self.relators)

    def format_word(self, word) -> str:
        parts = []
        for x in word:
            name = self.generators[abs(x) - 1]
            parts.append(name if x > 0 else name.upper())
        return " ".join(parts) if parts else "1"

    def __str__(self):
        gens = ", ".join(self.generators)
        rels = ", ".join(self.format_word(r) for r in self.relators)
        return f"< {gens} | {rels} >" if rels else f"< {gens} | >"

    def to_json(self) -> dict:
        return {"generators": list(self.generators), "relators": self.word_pairs()}

    @classmethod
    def from_json(cls, data) -> Presentation:
        if isinstance(data, str):
            data = json.loads(data)
        rels = tuple(
            tuple((int(i) + 1) * (1 if int(e) > 0 else -1) for i, e in r) for r in data["relators"]
        )
        return cls(tuple(data["generators"]), rels)

    @classmethod
    def parse(cls, text: str) -> Presentation:
        """Parse ``< a, b | a b A B >`` (uppercase letter = inverse)."""
        body = text.strip()
        body = body.removeprefix("<")
        body = body.removesuffix(">")
        gens_part, _, rels_part = body.partition("|")
        gens = tuple(g.strip() for g in gens_part.split(",") if g.strip())
        index = {g: i + 1 for i, g in enumerate(gens)}
        rels = []
        for chunk in rels_part.split(","):
            toks = chunk.split()
            if not toks:
                continue
            word = []
            for tok in toks:
                if tok in index:
                    word.append(index[tok])
                elif tok.lower() in index and tok != tok.lower():
                    word.append(-index[tok.lower()])
                elif tok == "1":
                    continue
                else:
                    raise ValueError(f"unknown generator {tok!r}")
            rels.append(tuple(word))
        return cls(gens, tuple(rels))


def generator_names(n: int) -> tuple[str, ...]:
    letters = "abcdefghijklmnopqrstuvwxyz"
    if n <= len(letters):
        return tuple(letters[:n])
    return tuple(f"x{i + 1}" for i in range(n))


def crossing_arcs(d: WeldedDiagram) -> list[tuple[int, int, int, int]]:
    """``(over, incoming, outgoing, sign)`` arc indices for every crossing."""
    idx = arc_indices(d)
    k = max(1, d.crossing_count)
    over = {}
    under = {}
    for pos, p in enumerate(d.code):
        if p.role == UNDER:
            under[p.crossing] = (idx[pos], (idx[pos] + 1) % k)
        else:
            over[p.crossing] = idx[pos]
    out = []
    for c in d.crossings:
        inc, outg = under[c]
        out.append((over[c], inc, outg, d.signs[c]))
    return out


def wirtinger(d: WeldedDiagram) -> Presentation:
    """One generator per arc, one relator per classical crossing.

    With over arc a, incoming under arc b and outgoing under arc c the
    relator is ``c (a b a^-1)^-1`` for sign + and ``c (a^-1 b a)^-1`` for -.
    """
    n = max(1, d.crossing_count)
    rels = []
    for a, b, c, s in crossing_arcs(d):
        a, b, c = a + 1, b + 1, c + 1
        if s > 0:
            word = (c, a, -b, -a)
        else:
            word = (c, -a, -b, a)
        rels.append(free_reduce(word))
    return Presentation(generator_names(n), tuple(rels))


# --- Tietze simplification ---------------------------------------------------


def _substitute(word, gen, image):
    inv = inverse(image)
    out = []
    for x in word:
        if x == gen:
            out.extend(image)
        elif x == -gen:
            out.extend(inv)
        else:
            out.append(x)
    return cyclic_reduce(out)


def _solve_for(rel, pos):
    """Rewrite relator so the letter at ``pos`` is expressed by the rest."""
    x = rel[pos]
    rest = rel[pos + 1 :] + rel[:pos]  # rel ~ x * rest
    image = inverse(rest) if x > 0 else rest
    return abs(x), free_reduce(image)


def _occurrences(rel, g):
    return [i for i, x in enumerate(rel) if abs(x) == g]


def _best_shortening(a, b):
    """Shorter replacement for relator ``a`` using relator ``b``, if one exists.

    Looks for a common piece u of a rotation of ``a`` and a rotation of
    ``b^{+-1}`` with ``2|u| > |b|``; then ``a = u v`` and ``u = w^-1``.
    """
    best = None
    la, lb = len(a), len(b)
    if lb == 0 or la == 0:
        return None
    for bb in (b, inverse(b)):
        for j in range(lb):
            rb = bb[j:] + bb[:j]
            for i in range(la):
                k = 0
                while k < lb and k < la and a[(i + k) % la] == rb[k]:
                    k += 1
                if 2 * k > lb:
                    v = tuple(a[(i + k + s) % la] for s in range(la - k))
                    w = rb[k:]
                    new = cyclic_reduce(inverse(w) + v)
                    if len(new) < la and (best is None or (len(new), new) < (len(best), best)):
                        best = new
    return best


def tietze_simplify(
    p: Presentation, budget: int = 10**5, coset_limit: int | None = None
) -> Presentation:
    """Simplify a presentation by Tietze transformations.

    Repeats, until nothing applies or ``budget`` steps are spent: free and
    cyclic reduction, dropping empty and duplicate relators, eliminating a
    generator that occurs exactly once in some relator, and shortening a
    relator by a product with a rotation of another relator (or its inverse).

    When those stall on a group with H1 = Z, coset enumeration (at most
    ``coset_limit`` cosets, default ``min(budget, 200000)``) checks whether a
    single generator has index 1; if so the remaining generators are
    rewritten as its powers and eliminated.
    """
    if coset_limit is None:
        coset_limit = min(budget, 200_000)
    names = list(p.generators)
    gens = list(range(1, len(names) + 1))
    rels = [cyclic_reduce(r) for r in p.relators]
    steps = 0
    while steps < budget:
        steps += 1
        rels = _dedupe(rels)
        elim = _choose_elimination(rels, gens)
        if elim is not None:
            ri, g, image = elim
            del rels[ri]
            rels = [_substitute(r, g, image) for r in rels]
            gens.remove(g)
            continue
        short = _choose_shortening(rels)
        if short is not None:
            ri, new = short
            rels[ri] = new
            continue
        if len(gens) > 1 and _collapse_to_cyclic(names, gens, rels, coset_limit):
            continue
        break
    rels = _dedupe(rels)
    return _renumber(names, gens, rels)


def _collapse_to_cyclic(names, gens, rels, coset_limit):
    """Stall breaker: if one generator g has coset index 1 and H1 = Z, then
    G = <g> = Z and every other generator h equals g^(phi(h) phi(g)). Those
    relators are consequences, so adding them is a Tietze move; afterwards h
    is eliminated. Mutates ``gens``/``rels`` and returns True on success."""
    from .cosets import coset_index
    from .invariants import _abelian_map, is_h1_infinite_cyclic

    current = _renumber(names, gens, rels)
    if not is_h1_infinite_cyclic(current):
        return False
    phi = _abelian_map(current)
    for k, g in enumerate(gens):
        if abs(phi[k]) != 1:
            continue
        if coset_index(current.rank, current.relators, [(k + 1,)], coset_limit) != 1:
            continue
        for j, h in enumerate(gens):
            if h == g:
                continue
            e = phi[j] * phi[k]
            image = (g,) * e if e >= 0 else (-g,) * (-e)
            rels[:] = [_substitute(r, h, image) for r in rels]
        gens[:] = [g]
        rels[:] = [r for r in rels if r]
        return True
    return False


def _dedupe(rels):
    seen = set()
    out = []
    for r in rels:
        r = cyclic_reduce(r)
        if not r:
            continue
        key = cyclic_key(r)
        if key in seen:
            continue
        seen.add(key)
        out.append(r)
    return out


def _choose_elimination(rels, gens):
    best = None
    for ri, r in enumerate(rels):
        for g in gens:
            occ = _occurrences(r, g)
            if len(occ) != 1:
                continue
            gen, image = _solve_for(r, occ[0])
            growth = sum(
                len(_occurrences(s, g)) * (len(image) - 1) for j, s in enumerate(rels) if j != ri
            )
            key = (growth, len(r), ri, g)
            if best is None or key < best[0]:
                best = (key, ri, gen, image)
    return None if best is None else best[1:]


def _choose_shortening(rels):
    best = None
    for i, a in enumerate(rels):
        for j, b in enumerate(rels):
            if i == j or len(b) > 2 * len(a) + 2:
                continue
            new = _best_shortening(a, b)
            if new is None:
                continue
            gain = len(a) - len(new)
            key = (-gain, sum(len(r) for r in rels) - gain, new, i)
            if best is None or key < best[0]:
                best = (key, i, new)
    return None if best is None else best[1:]


def _renumber(names, gens, rels):
    remap = {g: k + 1 for k, g in enumerate(gens)}
    new_rels = tuple(tuple(remap[abs(x)] * (1 if x > 0 else -1) for x in r) for r in rels)
    return Presentation(tuple(names[g - 1] for g in gens), new_rels)


def is_infinite_cyclic_certificate(p: Presentation, budget: int = 10**5) -> str:
    """``"Proved"`` when Tietze moves reach ``< a | >``, else ``"Unknown"``."""
    q = tietze_simplify(p, budget)
    return PROVED if (q.rank == 1 and not q.relators) else UNKNOWN


PROVED = "Proved"
UNKNOWN = "Unknown"


def presentation_from_words(names: Sequence[str], relators) -> Presentation:
    return Presentation(tuple(names), tuple(free_reduce(r) for r in relators))
