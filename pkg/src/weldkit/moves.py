"""Welded moves on Gauss codes and a bounded simplification search.

Virtual moves (and the detour move built from them) act trivially on codes
that omit welded crossings, so only R1, R2, R3 and the over-forbidden move
F_o (swap of two adjacent over passes) are enumerated here. The
under-forbidden move is deliberately absent.
"""

from __future__ import annotations

import heapq
import json
from dataclasses import dataclass, field

from . import _kernels
from .errors import InapplicableMove
from .gaussdiag import WeldedDiagram, canonicalize, pack, serialize

R1_DELETE = "R1_delete"
R1_INSERT = "R1_insert"
R2_DELETE = "R2_delete"
R2_INSERT = "R2_insert"
R3 = "R3"
FO_SWAP = "FO_swap"

DELETE_KINDS = (R1_DELETE, R2_DELETE, FO_SWAP, R3)


@dataclass(frozen=True)
class MoveInstance:
    """A move located by positions in a diagram's stored code.

    ``location`` holds code positions (the first position of each affected
    adjacent pair for deletes, swaps and R3; insertion gaps for inserts).
    ``params`` carries insert data: sign and, for R2, orientation.
    """

    kind: str
    location: tuple[int, ...]
    params: tuple = ()

    def to_json(self):
        out = {"kind": self.kind, "location": list(self.location)}
        if self.params:
            out["params"] = list(self.params)
        return out

    @classmethod
    def from_json(cls, obj):
        return cls(obj["kind"], tuple(obj["location"]), tuple(obj.get("params", ())))


# --- token helpers -----------------------------------------------------------


def _lab(t):
    return t >> 2


def _is_under(t):
    return t & 2


def _sign(t):
    return -1 if t & 1 else 1


def _conj(a, b, s):
    # Wirtinger output arc: a b a^-1 for +, a^-1 b a for -
    if s > 0:
        return _reduce(a + b + _inv(a))
    return _reduce(_inv(a) + b + a)


def _inv(w):
    return tuple(-x for x in reversed(w))


def _reduce(w):
    out = []
    for x in w:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


# --- enumeration on packed tokens ---------------------------------------------


def _r1_sites(tokens):
    n = len(tokens)
    if n < 2:
        return []
    return [
        i
        for i in range(n)
        if _lab(tokens[i]) == _lab(tokens[(i + 1) % n]) and n > 1 and (n > 2 or i == 0)
    ]


def _r2_sites(tokens):
    n = len(tokens)
    if n < 4:
        return []
    over_pairs = {}
    under_pairs = {}
    for i in range(n):
        a, b = tokens[i], tokens[(i + 1) % n]
        la, lb = _lab(a), _lab(b)
        if la == lb:
            continue
        if not _is_under(a) and not _is_under(b):
            over_pairs[i] = (la, lb)
        elif _is_under(a) and _is_under(b):
            under_pairs[frozenset((la, lb))] = under_pairs.get(frozenset((la, lb)), []) + [i]
    sign = {_lab(t): _sign(t) for t in tokens}
    out = []
    for i, (la, lb) in over_pairs.items():
        if sign[la] != -sign[lb]:
            continue
        for j in under_pairs.get(frozenset((la, lb)), []):
            out.append((i, j))
    return out


def _fo_sites(tokens):
    n = len(tokens)
    out = []
    for i in range(n):
        a, b = tokens[i], tokens[(i + 1) % n]
        if not _is_under(a) and not _is_under(b) and _lab(a) != _lab(b):
            out.append(i)
    return out if n > 2 else []


def _r3_sites(tokens):
    """Triangles (top, middle, bottom) whose swap preserves the local
    Wirtinger action; see _r3_preserves_action."""
    n = len(tokens)
    if n < 6:
        return []
    pos = {}
    for i, t in enumerate(tokens):
        pos[(_lab(t), bool(_is_under(t)))] = i

    def adjacent(p, q):
        if (p + 1) % n == q:
            return p
        if (q + 1) % n == p:
            return q
        return None

    sign = {_lab(t): _sign(t) for t in tokens}
    out = []
    for i in range(n):
        a, b = tokens[i], tokens[(i + 1) % n]
        if _is_under(a) or _is_under(b) or _lab(a) == _lab(b):
            continue
        for mid, bot in ((_lab(a), _lab(b)), (_lab(b), _lab(a))):
            um = pos[(mid, True)]
            for q in ((um - 1) % n, (um + 1) % n):
                z = _lab(tokens[q])
                if z in (mid, bot) or _is_under(tokens[q]):
                    continue
                j = adjacent(um, q)
                k = adjacent(pos[(bot, True)], pos[(z, True)])
                if j is None or k is None:
                    continue
                if len({i, (i + 1) % n, j, (j + 1) % n, k, (k + 1) % n}) != 6:
                    continue
                if _r3_preserves_action(tokens, j, k, mid, bot, z, sign):
                    out.append((i, j, k))
    return sorted(set(out))


def _r3_preserves_action(tokens, j, k, mid, bot, z, sign):
    """Compare the bottom strand's outgoing arc, as a word in the incoming
    top (1), middle (2) and bottom (3) arcs, before and after reversing the
    three pairs. The middle strand's output does not depend on the order."""
    T, M, B = (1,), (2,), (3,)
    m_out = _conj(T, M, sign[mid])

    def bottom_out(mid_under_first, bot_first):
        z_over = m_out if mid_under_first else M
        if bot_first:
            b1 = _conj(T, B, sign[bot])
            return _conj(z_over, b1, sign[z])
        b1 = _conj(z_over, B, sign[z])
        return _conj(T, b1, sign[bot])

    mid_under_first = _lab(tokens[j]) == mid
    bot_first = _lab(tokens[k]) == bot
    before = bottom_out(mid_under_first, bot_first)
    after = bottom_out(not mid_under_first, not bot_first)
    return before == after


def _swap(tokens, i):
    n = len(tokens)
    out = list(tokens)
    out[i], out[(i + 1) % n] = out[(i + 1) % n], out[i]
    return tuple(out)


def _delete_positions(tokens, positions):
    drop = set(positions)
    return tuple(t for i, t in enumerate(tokens) if i not in drop)


def _apply_tokens(tokens, m: MoveInstance):
    n = len(tokens)
    if m.kind == R1_DELETE:
        (i,) = m.location
        if i not in _r1_sites(tokens):
            raise InapplicableMove(f"no R1 kink at {i}")
        return _delete_positions(tokens, (i, (i + 1) % n))
    if m.kind == R2_DELETE:
        i, j = m.location
        if (i, j) not in _r2_sites(tokens):
            raise InapplicableMove(f"no R2 bigon at {(i, j)}")
        return _delete_positions(tokens, (i, (i + 1) % n, j, (j + 1) % n))
    if m.kind == FO_SWAP:
        (i,) = m.location
        if i not in _fo_sites(tokens):
            raise InapplicableMove(f"no adjacent over passes at {i}")
        return _swap(tokens, i)
    if m.kind == R3:
        if tuple(m.location) not in _r3_sites(tokens):
            raise InapplicableMove(f"no R3 triangle at {m.location}")
        out = tokens
        for i in m.location:
            out = _swap(out, i)
        return out
    if m.kind == R1_INSERT:
        return _r1_insert(tokens, m)
    if m.kind == R2_INSERT:
        return _r2_insert(tokens, m)
    raise InapplicableMove(f"unknown move kind {m.kind!r}")


def _fresh(tokens, k=1):
    top = max((_lab(t) for t in tokens), default=0)
    return [top + 1 + i for i in range(k)]


def _r1_insert(tokens, m):
    (gap,) = m.location
    sign, over_first = m.params
    if not 0 <= gap <= len(tokens):
        raise InapplicableMove(f"gap {gap} out of range")
    (x,) = _fresh(tokens)
    o, u = pack(x, "O", sign), pack(x, "U", sign)
    pair = (o, u) if over_first else (u, o)
    return tokens[:gap] + pair + tokens[gap:]


def _r2_insert(tokens, m):
    over_gap, under_gap = m.location
    sign, parallel = m.params
    n = len(tokens)
    if not (0 <= over_gap <= n and 0 <= under_gap <= n):
        raise InapplicableMove("gap out of range")
    x, y = _fresh(tokens, 2)
    overs = (pack(x, "O", sign), pack(y, "O", -sign))
    unders = (pack(x, "U", sign), pack(y, "U", -sign))
    if not parallel:
        unders = unders[::-1]
    out = list(tokens)
    # insert the later gap first so earlier indices stay valid
    if over_gap > under_gap:
        out[over_gap:over_gap] = overs
        out[under_gap:under_gap] = unders
    else:
        out[under_gap:under_gap] = unders
        out[over_gap:over_gap] = overs
    return tuple(out)


def _moves_of(tokens):
    for i in _r1_sites(tokens):
        yield MoveInstance(R1_DELETE, (i,))
    for loc in _r2_sites(tokens):
        yield MoveInstance(R2_DELETE, loc)
    for i in _fo_sites(tokens):
        yield MoveInstance(FO_SWAP, (i,))
    for loc in _r3_sites(tokens):
        yield MoveInstance(R3, loc)


# --- public API ----------------------------------------------------------------


def applicable_moves(d: WeldedDiagram, inserts: bool = False, sign: int = 1) -> list[MoveInstance]:
    """All R1/R2 deletions, F_o swaps and valid R3 triangles of ``d``.

    With ``inserts=True`` the R1 and R2 insertions with the given sign are
    appended as well (every gap, both orders; every gap pair, both
    orientations).
    """
    toks = d.tokens
    moves = list(_moves_of(toks))
    if inserts:
        n = len(toks)
        for g in range(n + 1 if n else 1):
            for over_first in (True, False):
                moves.append(MoveInstance(R1_INSERT, (g,), (sign, over_first)))
        for g1 in range(n + 1 if n else 1):
            for g2 in range(n + 1 if n else 1):
                for parallel in (True, False):
                    moves.append(MoveInstance(R2_INSERT, (g1, g2), (sign, parallel)))
    return moves


def apply(d: WeldedDiagram, m: MoveInstance) -> WeldedDiagram:
    return WeldedDiagram.from_tokens(_apply_tokens(d.tokens, m), d.welded_history)


def is_descending(d: WeldedDiagram) -> int | None:
    """A basepoint from which every crossing is first met as an over pass."""
    if not d.code:
        return 0
    prof = _kernels.warping_profile(d.tokens)
    for b, v in enumerate(prof):
        if v == 0:
            return b
    return None


@dataclass
class SimplifyReport:
    result: WeldedDiagram
    trace: list[MoveInstance] = field(default_factory=list)
    states_explored: int = 0
    budget_exhausted: bool = False

    def to_json(self):
        return {
            "result": serialize(self.result),
            "crossings": self.result.crossing_count,
            "trace": [m.to_json() for m in self.trace],
            "states_explored": self.states_explored,
            "budget_exhausted": self.budget_exhausted,
        }

    def dumps(self):
        return json.dumps(self.to_json())


def replay(d: WeldedDiagram, trace) -> WeldedDiagram:
    """Re-apply a simplify trace; each move is located in the canonical code
    of the state it acts on."""
    d = canonicalize(d)
    for m in trace:
        d = canonicalize(apply(d, m))
    return d


def _min_warping(tokens):
    if not tokens:
        return 0
    prof = _kernels.warping_profile(tokens)
    c = len(tokens) // 2
    return min(min(prof), c - max(prof))


def simplify(d: WeldedDiagram, budget: int = 10**6) -> SimplifyReport:
    """Best-first search for a smaller diagram using R1/R2 deletions, F_o
    swaps and R3.

    States are canonical codes; the frontier is ordered by crossing count,
    then by the smaller of the forward and backward warping degrees. The
    search stops at the empty code, when the frontier runs dry, or after
    ``budget`` distinct states.
    """
    canon = _kernels.canonical_form
    start = canon(d.tokens)
    parent = {start: None}
    counter = 0
    frontier = [(len(start) // 2, _min_warping(start), counter, start)]
    best = (len(start) // 2, _min_warping(start), start)
    exhausted = False
    while frontier:
        _, _, _, state = heapq.heappop(frontier)
        if not state:
            best = (0, 0, state)
            break
        for m in _moves_of(state):
            nxt = canon(_apply_tokens(state, m))
            if nxt in parent:
                continue
            if len(parent) >= budget:
                exhausted = True
                break
            parent[nxt] = (state, m)
            key = (len(nxt) // 2, _min_warping(nxt))
            if key < best[:2]:
                best = (*key, nxt)
            counter += 1
            heapq.heappush(frontier, (*key, counter, nxt))
        if exhausted or not best[2]:
            break
    trace = []
    s = best[2]
    while parent[s] is not None:
        prev, m = parent[s]
        trace.append(m)
        s = prev
    trace.reverse()
    return SimplifyReport(
        WeldedDiagram.from_tokens(best[2]),
        trace,
        len(parent),
        exhausted,
    )
