"""Warping degrees, triviality verdicts, welded unknotting bounds and the
weld tables of the six-crossing knots."""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations

from . import _kernels
from .errors import BadParameter, CatalogMissing, InternalInconsistency
from .families import fingerprint
from .gaussdiag import WeldedDiagram, serialize, weld_set
from .grouppres import (
    PROVED,
    alexander_polynomial,
    dihedral_nontriviality,
    is_infinite_cyclic_certificate,
    tietze_simplify,
    wirtinger,
)
from .moves import MoveInstance, replay, simplify

FORWARD = "Forward"
REVERSED = "Reversed"

UNKNOT = "Unknot"
KNOTTED = "Knotted"
UNKNOWN = "Unknown"

SIX_CROSSING_KNOTS = ("6_1", "6_2", "6_3")


# --- warping degree -----------------------------------------------------------


def warping_profile(d: WeldedDiagram, orientation: str = FORWARD) -> list[int]:
    """Warping degree at every basepoint; basepoint b sits just before pass b.

    Walking backwards from b meets each crossing first at the pass that is
    met last walking forwards, so the reversed value is the crossing count
    minus the forward one.
    """
    fwd = list(_kernels.warping_profile(d.tokens))
    if orientation == FORWARD:
        return fwd
    if orientation == REVERSED:
        c = d.crossing_count
        return [c - x for x in fwd]
    raise BadParameter(f"orientation must be {FORWARD} or {REVERSED}, got {orientation!r}")


def warping_degree_at(d: WeldedDiagram, b: int, orientation: str = FORWARD) -> int:
    n = max(1, len(d.code))
    if not 0 <= b < n:
        raise BadParameter(f"basepoint {b} out of range 0..{n - 1}")
    return warping_profile(d, orientation)[b]


def warping_degree_diagram(d: WeldedDiagram) -> tuple[int, int]:
    """``(d(D), d(-D))``: minimal warping degree over basepoints per orientation."""
    return min(warping_profile(d, FORWARD)), min(warping_profile(d, REVERSED))


def _zero_basepoint(d: WeldedDiagram):
    for orientation in (FORWARD, REVERSED):
        prof = warping_profile(d, orientation)
        if 0 in prof:
            return prof.index(0), orientation
    return None


# --- verdicts -----------------------------------------------------------------


@dataclass(frozen=True)
class Witness:
    """Evidence of triviality.

    ``descending``: basepoint with forward warping degree 0. ``warping``:
    basepoint with warping degree 0 for the reversed orientation.
    ``simplify``: a trace (moves located in canonical codes) ending at the
    empty code, or at a diagram with a zero basepoint given alongside.
    """

    kind: str
    basepoint: int | None = None
    orientation: str | None = None
    trace: tuple[MoveInstance, ...] = ()

    def to_json(self):
        out = {"kind": self.kind}
        if self.basepoint is not None:
            out["basepoint"] = self.basepoint
            out["orientation"] = self.orientation
        if self.kind == "simplify":
            out["trace"] = [m.to_json() for m in self.trace]
        return out


@dataclass(frozen=True)
class Certificate:
    kind: str  # "Dihedral" or "AlexanderNontrivial"
    modulus: int | None = None
    polynomial: str | None = None

    def to_json(self):
        if self.kind == "Dihedral":
            return {"kind": self.kind, "modulus": self.modulus}
        return {"kind": self.kind, "polynomial": self.polynomial}

    def __str__(self):
        if self.kind == "Dihedral":
            return f"Dihedral({self.modulus})"
        return f"AlexanderNontrivial({self.polynomial})"


@dataclass(frozen=True)
class TrivialityVerdict:
    status: str
    witness: Witness | None = None
    certificate: Certificate | None = None
    states_explored: int = 0

    def to_json(self):
        return {
            "status": self.status,
            "witness": self.witness.to_json() if self.witness else None,
            "certificate": self.certificate.to_json() if self.certificate else None,
            "states_explored": self.states_explored,
        }

    def __str__(self):
        if self.status == KNOTTED:
            return f"Knotted({self.certificate})"
        if self.status == UNKNOT:
            return f"Unknot({self.witness.kind})"
        return UNKNOWN


def split_budget(budget: int) -> tuple[int, int]:
    """70% of the budget to simplify states, 30% to certificate search."""
    if budget < 1:
        raise BadParameter(f"budget must be >= 1, got {budget}")
    return max(1, budget * 7 // 10), max(1, budget * 3 // 10)


def knotted_certificate(d: WeldedDiagram, m_max: int = 21) -> Certificate | None:
    m = dihedral_nontriviality(d, m_max)
    if m is not None:
        return Certificate("Dihedral", modulus=m)
    delta = alexander_polynomial(wirtinger(d))
    if delta != 1:
        return Certificate("AlexanderNontrivial", polynomial=str(delta))
    return None


def triviality_verdict(d: WeldedDiagram, budget: int = 10**6, m_max: int = 21) -> TrivialityVerdict:
    """Unknot via a zero warping basepoint (either orientation) or a simplify
    run ending at the empty code or at a zero-warping diagram; Knotted via a
    dihedral quotient (odd m <= m_max) or a nontrivial Alexander polynomial.

    The search is skipped once a certificate is known; the cheap warping
    check still runs on both sides, and agreement of the two raises
    InternalInconsistency.
    """
    simplify_budget, _ = split_budget(budget)
    cert = knotted_certificate(d, m_max)
    zero = _zero_basepoint(d)
    if zero is not None:
        if cert is not None:
            raise InternalInconsistency(f"{serialize(d)}: zero warping basepoint but {cert}")
        b, orientation = zero
        kind = "descending" if orientation == FORWARD else "warping"
        return TrivialityVerdict(UNKNOT, Witness(kind, b, orientation))
    if cert is not None:
        return TrivialityVerdict(KNOTTED, certificate=cert)
    rep = simplify(d, simplify_budget)
    if rep.result.crossing_count == 0:
        return TrivialityVerdict(
            UNKNOT, Witness("simplify", trace=tuple(rep.trace)), None, rep.states_explored
        )
    zero = _zero_basepoint(rep.result)
    if zero is not None:
        b, orientation = zero
        return TrivialityVerdict(
            UNKNOT, Witness("simplify", b, orientation, tuple(rep.trace)), None, rep.states_explored
        )
    return TrivialityVerdict(UNKNOWN, states_explored=rep.states_explored)


def check_verdict(d: WeldedDiagram, v: TrivialityVerdict) -> bool:
    """Replay a verdict's evidence independently of how it was found."""
    if v.status == UNKNOT:
        w = v.witness
        target = d
        if w.kind == "simplify":
            target = replay(d, w.trace)
            if w.basepoint is None:
                return target.crossing_count == 0
        return warping_degree_at(target, w.basepoint, w.orientation) == 0
    if v.status == KNOTTED:
        c = v.certificate
        if c.kind == "Dihedral":
            from .grouppres import coloring_count

            return coloring_count(d, c.modulus).nontrivial_exists
        return str(alexander_polynomial(wirtinger(d))) == c.polynomial
    return True


# --- welded unknotting number -------------------------------------------------


@dataclass(frozen=True)
class UnknottingBounds:
    lower: int
    upper: int
    unresolved_subsets: int
    witness_subset: tuple[int, ...] = ()

    def to_json(self):
        return {
            "lower": self.lower,
            "upper": self.upper,
            "unresolved_subsets": self.unresolved_subsets,
            "witness_subset": list(self.witness_subset),
        }


def welded_unknotting_bounds(d: WeldedDiagram, budget: int = 10**6) -> UnknottingBounds:
    """Bounds on the number of welds needed to reach the unknot.

    Subsets are tried by increasing size. ``upper`` is the first size with
    an Unknot verdict; ``lower`` is the first size with any verdict other
    than Knotted. Each Unknown verdict is counted in ``unresolved_subsets``.
    """
    lower = None
    unresolved = 0
    for k in range(d.crossing_count + 1):
        for subset in combinations(d.crossings, k):
            v = triviality_verdict(weld_set(d, set(subset)), budget)
            if v.status != KNOTTED and lower is None:
                lower = k
            if v.status == UNKNOWN:
                unresolved += 1
            if v.status == UNKNOT:
                return UnknottingBounds(lower, k, unresolved, subset)
    # unreachable: welding every crossing leaves the empty code
    raise InternalInconsistency("no weld subset gave the unknot")


# --- weld tables --------------------------------------------------------------

Z_CERTIFIED = "Z"
NON_Z_CERTIFIED = "nonZ"


@dataclass(frozen=True)
class WeldRow:
    knot: str
    subset: tuple[int, ...]
    verdict: TrivialityVerdict
    group_class: str
    presentation: str
    colorings: dict
    alexander: tuple[int, ...]

    def to_json(self):
        return {
            "knot": self.knot,
            "subset": list(self.subset),
            "verdict": self.verdict.to_json(),
            "group": self.group_class,
            "presentation": self.presentation,
            "fingerprint": {
                "colorings": {str(m): c for m, c in sorted(self.colorings.items())},
                "alexander": list(self.alexander),
            },
        }


@dataclass
class WeldTableReport:
    rows: list[WeldRow] = field(default_factory=list)

    def summary(self) -> dict:
        out = {}
        for r in self.rows:
            key = f"{r.knot}/{len(r.subset)}"
            c = out.setdefault(key, Counter())
            c[r.group_class] += 1
            if r.verdict.status == UNKNOT:
                c["unknot"] += 1
        return {k: dict(sorted(v.items())) for k, v in out.items()}

    def select(self, knot: str, size: int) -> list[WeldRow]:
        return [r for r in self.rows if r.knot == knot and len(r.subset) == size]

    def to_json(self):
        return {"rows": [r.to_json() for r in self.rows], "summary": self.summary()}

    def dumps(self):
        return json.dumps(self.to_json(), indent=2)

    def to_text(self) -> str:
        head = ("knot", "welded", "verdict", "group", "presentation", "col3/5/7", "alexander")
        lines = [head]
        for r in self.rows:
            lines.append(
                (
                    r.knot,
                    "{" + ",".join(f"c{i}" for i in r.subset) + "}",
                    str(r.verdict),
                    r.group_class,
                    r.presentation,
                    "/".join(str(r.colorings[m]) for m in sorted(r.colorings)),
                    " ".join(str(x) for x in r.alexander),
                )
            )
        widths = [max(len(row[i]) for row in lines) for i in range(len(head))]
        out = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in lines]
        out.insert(1, "  ".join("-" * w for w in widths))
        out.append("")
        for key, counts in self.summary().items():
            out.append(f"{key}: " + ", ".join(f"{k}={v}" for k, v in counts.items()))
        return "\n".join(out) + "\n"


def weld_row(name: str, d: WeldedDiagram, subset, budget: int = 10**6) -> WeldRow:
    w = weld_set(d, set(subset))
    _, cert_budget = split_budget(budget)
    v = triviality_verdict(w, budget)
    p = wirtinger(w)
    proved = is_infinite_cyclic_certificate(p, cert_budget) == PROVED
    if proved and v.status == KNOTTED:
        raise InternalInconsistency(f"{name} {subset}: Tietze proves Z but {v}")
    if proved:
        group = Z_CERTIFIED
    elif v.status == KNOTTED:
        group = NON_Z_CERTIFIED
    else:
        group = UNKNOWN
    fp = fingerprint(w)
    pres = str(tietze_simplify(p, cert_budget))
    return WeldRow(name, tuple(subset), v, group, pres, fp.colorings, fp.alexander)


def table_6crossings(catalog, sizes=(1, 2, 3), budget: int = 10**6) -> WeldTableReport:
    """Every weld subset of the requested sizes for 6_1, 6_2 and 6_3."""
    by_name = {e.name: e for e in catalog}
    for name in SIX_CROSSING_KNOTS:
        if name not in by_name:
            raise CatalogMissing(name)
    report = WeldTableReport()
    for name in SIX_CROSSING_KNOTS:
        d = by_name[name].diagram
        for k in sizes:
            for subset in combinations(d.crossings, k):
                report.rows.append(weld_row(name, d, subset, budget))
    return report


# --- single-weld warping search -----------------------------------------------


@dataclass(frozen=True)
class SingleWeldWarping:
    crossing: int
    diagram: WeldedDiagram
    forward: tuple[int, ...]
    reversed: tuple[int, ...]

    @property
    def degrees(self) -> tuple[int, int]:
        return min(self.forward), min(self.reversed)

    def to_json(self):
        return {
            "crossing": self.crossing,
            "code": serialize(self.diagram),
            "forward": list(self.forward),
            "reversed": list(self.reversed),
            "degrees": list(self.degrees),
        }


def single_weld_warping(d: WeldedDiagram) -> list[SingleWeldWarping]:
    """Per-basepoint warping profiles of every single weld of ``d``."""
    out = []
    for c in d.crossings:
        w = weld_set(d, {c})
        out.append(
            SingleWeldWarping(
                c, w, tuple(warping_profile(w, FORWARD)), tuple(warping_profile(w, REVERSED))
            )
        )
    return out
