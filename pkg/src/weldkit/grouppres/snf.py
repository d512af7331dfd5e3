"""Exact Smith normal form over the integers (Python ints, no overflow)."""

from __future__ import annotations

from math import gcd


def smith_normal_form(matrix) -> list[int]:
    """Diagonal of the Smith normal form of an integer matrix.

    Returns ``min(rows, cols)`` non-negative entries ``d1 | d2 | ...``; zero
    entries come last.

    >>> smith_normal_form([[2, 0], [0, 3]])
    [1, 6]
    """
    a = [[int(x) for x in row] for row in matrix]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    if any(len(r) != cols for r in a):
        raise ValueError("matrix is not rectangular")
    n = min(rows, cols)
    diag = []
    for t in range(n):
        if not _move_min_to(a, t, rows, cols):
            break
        while True:
            p = a[t][t]
            dirty = False
            for i in range(t + 1, rows):
                q = a[i][t] // p
                if q:
                    ri, rt = a[i], a[t]
                    for j in range(t, cols):
                        ri[j] -= q * rt[j]
                dirty = dirty or a[i][t] != 0
            for j in range(t + 1, cols):
                q = a[t][j] // p
                if q:
                    for r in a:
                        r[j] -= q * r[t]
                dirty = dirty or a[t][j] != 0
            if dirty:
                _move_min_to(a, t, rows, cols, line_only=True)
                continue
            bad = next(
                (i for i in range(t + 1, rows) for j in range(t + 1, cols) if a[i][j] % p),
                None,
            )
            if bad is None:
                break
            for j in range(t, cols):
                a[t][j] += a[bad][j]
        diag.append(abs(a[t][t]))
    diag.extend([0] * (n - len(diag)))
    return diag


def _move_min_to(a, t, rows, cols, line_only=False):
    """Swap the smallest nonzero entry to (t, t).

    With ``line_only`` only row t and column t are searched, which is where
    remainders live after a reduction sweep.
    """
    best = None
    if line_only:
        cand = [(i, t) for i in range(t, rows)] + [(t, j) for j in range(t + 1, cols)]
    else:
        cand = ((i, j) for i in range(t, rows) for j in range(t, cols))
    for i, j in cand:
        v = a[i][j]
        if v and (best is None or abs(v) < best[0]):
            best = (abs(v), i, j)
    if best is None:
        return False
    _, i, j = best
    a[t], a[i] = a[i], a[t]
    if j != t:
        for r in a:
            r[t], r[j] = r[j], r[t]
    return True


def elementary_divisors(matrix, cols: int) -> list[int]:
    """SNF diagonal padded with zeros to ``cols`` entries (one per column)."""
    d = smith_normal_form(matrix) if matrix else []
    return d + [0] * (cols - len(d))


def gcd_all(values):
    g = 0
    for v in values:
        g = gcd(g, v)
    return g
