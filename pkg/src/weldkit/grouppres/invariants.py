"""Abelian invariants of presentations and diagrams: abelianization, Fox
colorings (dihedral quotients) and the Alexander polynomial."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd

from ..errors import BadModulus, NotRankOne
from ..gaussdiag import WeldedDiagram
from .laurent import LaurentPolynomial, det_bareiss, poly_exact_div, poly_gcd
from .presentation import Presentation, crossing_arcs
from .snf import smith_normal_form


def abelianization(p: Presentation) -> list[int]:
    """Elementary divisors of the exponent-sum matrix, one per generator.

    Trailing zeros count the free rank: ``[1, 1, 0]`` is Z, ``[2, 0]`` is
    Z/2 x Z.
    """
    m = p.exponent_matrix()
    d = smith_normal_form(m) if m else []
    return d + [0] * (p.rank - len(d))


def free_rank(p: Presentation) -> int:
    return sum(1 for x in abelianization(p) if x == 0)


def is_h1_infinite_cyclic(p: Presentation) -> bool:
    d = abelianization(p)
    return d.count(0) == 1 and all(x in (0, 1) for x in d)


@dataclass(frozen=True)
class ColoringReport:
    modulus: int
    total_count: int
    nontrivial_exists: bool

    def to_json(self):
        return {
            "modulus": self.modulus,
            "total": self.total_count,
            "nontrivial": self.nontrivial_exists,
        }


def coloring_matrix(d: WeldedDiagram) -> list[list[int]]:
    """Rows = crossings, columns = arcs, entries of ``out - 2*over + in``."""
    n = max(1, d.crossing_count)
    rows = []
    for a, b, c, _ in crossing_arcs(d):
        row = [0] * n
        row[c] += 1
        row[a] -= 2
        row[b] += 1
        rows.append(row)
    return rows


def coloring_count(d: WeldedDiagram, m: int) -> ColoringReport:
    """Number of Fox m-colorings, from the SNF of the coloring matrix.

    A system ``M x = 0`` over Z/m has ``prod_i gcd(d_i, m)`` solutions, the
    product running over one SNF divisor per column (zero past the rank).
    """
    if m < 2:
        raise BadModulus(f"modulus must be >= 2, got {m}")
    mat = coloring_matrix(d)
    cols = max(1, d.crossing_count)
    divs = smith_normal_form(mat) if mat else []
    divs = divs + [0] * (cols - len(divs))
    total = 1
    for x in divs:
        total *= gcd(x, m)
    return ColoringReport(m, total, total > m)


def dihedral_nontriviality(d: WeldedDiagram, m_max: int = 21) -> int | None:
    """Smallest odd m in 3..m_max admitting a nonconstant Fox m-coloring.

    A nonconstant coloring with m odd maps the group onto a nonabelian
    dihedral group, so the group is not Z.
    """
    if m_max < 3:
        raise BadModulus(f"m_max must be >= 3, got {m_max}")
    mat = coloring_matrix(d)
    cols = max(1, d.crossing_count)
    divs = smith_normal_form(mat) if mat else []
    divs = divs + [0] * (cols - len(divs))
    for m in range(3, m_max + 1, 2):
        total = 1
        for x in divs:
            total *= gcd(x, m)
        if total > m:
            return m
    return None


def _abelian_map(p: Presentation) -> list[int]:
    """Generator images under a surjection G -> Z (kernel of the exponent matrix)."""
    if free_rank(p) != 1:
        raise NotRankOne(f"abelianization has free rank {free_rank(p)}, expected 1")
    n = p.rank
    rows = [[Fraction(x) for x in r] for r in p.exponent_matrix()]
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(n) if c not in pivots]
    f = free[0]
    vec = [Fraction(0)] * n
    vec[f] = Fraction(1)
    for i, c in enumerate(pivots):
        vec[c] = -rows[i][f]
    den = 1
    for x in vec:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in vec]
    g = 0
    for x in ints:
        g = gcd(g, x)
    ints = [x // g for x in ints]
    if next(x for x in ints if x) < 0:
        ints = [-x for x in ints]
    return ints


def alexander_matrix(p: Presentation) -> list[list[LaurentPolynomial]]:
    """Abelianized Fox Jacobian: rows = relators, columns = generators."""
    phi = _abelian_map(p)
    mat = []
    for r in p.relators:
        row = [{} for _ in range(p.rank)]
        deg = 0
        for x in r:
            g = abs(x) - 1
            if x > 0:
                row[g][deg] = row[g].get(deg, 0) + 1
                deg += phi[g]
            else:
                deg -= phi[g]
                row[g][deg] = row[g].get(deg, 0) - 1
        mat.append([LaurentPolynomial(e) for e in row])
    return mat


def alexander_polynomial(p: Presentation) -> LaurentPolynomial:
    """gcd of the maximal minors of the Alexander matrix with one column
    removed, normalised to lowest degree 0 and positive leading coefficient."""
    n = p.rank
    if n == 1:
        _abelian_map(p)
        return LaurentPolynomial({0: 1})
    mat = alexander_matrix(p)
    # all meridians map to the same unit, so column sums vanish and any
    # dropped column gives the same minors up to units
    phi = _abelian_map(p)
    drop = min((i for i, x in enumerate(phi) if x), key=lambda i: abs(phi[i]))
    keep = [j for j in range(n) if j != drop]
    rows = [[row[j] for j in keep] for row in mat]
    if len(rows) < n - 1:
        return LaurentPolynomial()
    shifted = []
    for row in rows:
        lo = min((e.low for e in row if not e.is_zero()), default=0)
        shifted.append([_to_poly(e, lo) for e in row])
    g = [0]
    for combo in combinations(range(len(shifted)), n - 1):
        minor = det_bareiss([shifted[i] for i in combo])
        g = poly_gcd(g, minor)
        if g == [1]:
            break
    k = abs(phi[drop])
    if k > 1:
        # columns satisfy sum_j A_j (t^phi_j - 1) = 0; rescale to the t - 1 column
        g = poly_exact_div(g, [1] * k)
    return LaurentPolynomial.from_list(g).normalize()


def _to_poly(e: LaurentPolynomial, lo: int) -> list[int]:
    if e.is_zero():
        return [0]
    return [e.coeffs.get(d, 0) for d in range(lo, e.high + 1)]


def presentation_coloring_count(p: Presentation, m: int) -> int:
    """Fox m-colorings of a presentation whose generators are meridians.

    Sending every generator to a reflection ``y -> 2x - y`` of Z/m, a
    relator of even length acts as translation by twice the alternating sum
    of its letters' colors, so each relator gives one linear condition.
    Relators of odd length are reflections and admit no coloring. Only odd
    moduli are accepted: for even m the factor 2 makes the count disagree
    with diagram colorings.
    """
    if m < 3 or m % 2 == 0:
        raise BadModulus(f"modulus must be odd and >= 3, got {m}")
    rows = []
    for r in p.relators:
        if len(r) % 2:
            return 0
        row = [0] * p.rank
        for k, x in enumerate(r):
            row[abs(x) - 1] += 2 if k % 2 == 0 else -2
        rows.append(row)
    divs = smith_normal_form(rows) if rows else []
    divs = divs + [0] * (p.rank - len(divs))
    total = 1
    for x in divs:
        total *= gcd(x, m)
    return total
