"""Integer Laurent polynomials in one variable ``t`` and the Z[t] helpers
(exact division, gcd via primitive remainder sequences, Bareiss determinant)."""

from __future__ import annotations

from functools import reduce
from math import gcd


class LaurentPolynomial:
    """Finitely supported map degree -> nonzero integer coefficient."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        if coeffs is None:
            coeffs = {}
        elif not isinstance(coeffs, dict):
            coeffs = {i: c for i, c in enumerate(coeffs)}
        self.coeffs = {int(k): int(v) for k, v in coeffs.items() if v}

    @classmethod
    def monomial(cls, degree, coeff=1):
        return cls({degree: coeff})

    @classmethod
    def from_list(cls, coefficients, low=0):
        return cls({low + i: c for i, c in enumerate(coefficients)})

    def is_zero(self):
        return not self.coeffs

    @property
    def low(self):
        return min(self.coeffs) if self.coeffs else 0

    @property
    def high(self):
        return max(self.coeffs) if self.coeffs else 0

    def to_list(self):
        """Coefficients from the lowest stored degree upward."""
        if not self.coeffs:
            return [0]
        lo = self.low
        return [self.coeffs.get(d, 0) for d in range(lo, self.high + 1)]

    def normalize(self):
        """Shift to lowest degree 0 and make the leading coefficient positive."""
        if not self.coeffs:
            return LaurentPolynomial()
        lo = self.low
        s = -1 if self.coeffs[self.high] < 0 else 1
        return LaurentPolynomial({d - lo: s * c for d, c in self.coeffs.items()})

    def __add__(self, other):
        other = _coerce(other)
        out = dict(self.coeffs)
        for d, c in other.coeffs.items():
            out[d] = out.get(d, 0) + c
        return LaurentPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial({d: -c for d, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        out: dict[int, int] = {}
        for d1, c1 in self.coeffs.items():
            for d2, c2 in other.coeffs.items():
                out[d1 + d2] = out.get(d1 + d2, 0) + c1 * c2
        return LaurentPolynomial(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial({0: other})
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(sorted(self.coeffs.items())))

    def __repr__(self):
        return f"LaurentPolynomial({self.coeffs!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for d in sorted(self.coeffs, reverse=True):
            c = self.coeffs[d]
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if d == 0:
                body = str(a)
            else:
                mono = "t" if d == 1 else f"t^{d}"
                body = mono if a == 1 else f"{a}*{mono}"
            parts.append((sign, body))
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s


def _coerce(x):
    if isinstance(x, LaurentPolynomial):
        return x
    return LaurentPolynomial({0: x})


# --- Z[t] as coefficient lists, constant term first -------------------------


def _trim(p):
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def poly_mul(p, q):
    if p == [0] or q == [0]:
        return [0]
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return _trim(out)


def poly_sub(p, q):
    n = max(len(p), len(q))
    return _trim([(p[i] if i < len(p) else 0) - (q[i] if i < len(q) else 0) for i in range(n)])


def poly_exact_div(p, q):
    """p / q in Z[t]; raises ArithmeticError when q does not divide p."""
    if q == [0]:
        raise ZeroDivisionError("polynomial division by zero")
    p = list(p)
    if p == [0]:
        return [0]
    dq = len(q) - 1
    if len(p) - 1 < dq:
        raise ArithmeticError("inexact polynomial division")
    out = [0] * (len(p) - dq)
    for shift in range(len(p) - 1 - dq, -1, -1):
        c, r = divmod(p[shift + dq], q[-1])
        if r:
            raise ArithmeticError("inexact polynomial division")
        out[shift] = c
        if c:
            for i, b in enumerate(q):
                p[i + shift] -= c * b
    if any(p):
        raise ArithmeticError("inexact polynomial division")
    return _trim(out)


def content(p):
    return reduce(gcd, p, 0)


def primitive(p):
    c = content(p)
    if c == 0:
        return [0]
    q = [a // c for a in p]
    if q[-1] < 0:
        q = [-a for a in q]
    return q


def poly_gcd(p, q):
    """gcd in Z[t], normalised to positive leading coefficient."""
    p, q = _trim(list(p)), _trim(list(q))
    if p == [0]:
        return primitive(q) if q != [0] else [0]
    if q == [0]:
        return [abs(content(p))] if len(p) == 1 else _with_content(primitive(p), abs(content(p)))
    c = gcd(content(p), content(q))
    a, b = primitive(p), primitive(q)
    if len(a) < len(b):
        a, b = b, a
    while b != [0] and len(b) > 1:
        r = _pseudo_rem(a, b)
        a, b = b, (primitive(r) if r != [0] else [0])
    g = a if b == [0] else [1]
    return _with_content(primitive(g), c)


def _with_content(p, c):
    return [a * c for a in p]


def _pseudo_rem(a, b):
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(a) - 1 >= db and a != [0]:
        shift = len(a) - 1 - db
        la = a[-1]
        a = [x * lb for x in a]
        for i, y in enumerate(b):
            a[i + shift] -= la * y
        _trim(a)
        if a[-1] == 0:
            break
    return a


def det_bareiss(m):
    """Determinant of a square matrix over Z[t] (entries as coefficient lists)."""
    n = len(m)
    if n == 0:
        return [1]
    a = [[list(x) for x in row] for row in m]
    sign = 1
    prev = [1]
    for k in range(n - 1):
        if a[k][k] == [0]:
            for i in range(k + 1, n):
                if a[i][k] != [0]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return [0]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = poly_sub(poly_mul(a[i][j], a[k][k]), poly_mul(a[i][k], a[k][j]))
                a[i][j] = poly_exact_div(num, prev)
        prev = a[k][k]
    d = a[n - 1][n - 1]
    return d if sign > 0 else [-x for x in d]
