"""Exact Laurent polynomials in one variable ``q``.

A :class:`QPoly` is a sparse map ``exponent -> coefficient``. Exponents may be
negative; coefficients are Python ints (or ``Fraction`` when a caller divides
by an integer, e.g. power-sum expansions). Nothing here ever touches floats.

>>> qint(2) * qint(4)
QPoly('1+2q+2q^2+2q^3+q^4')
>>> parse_qpoly("q^3[2][2]")
QPoly('q^3+2q^4+q^5')
>>> format_qnumber(parse_qpoly("[2][4][6]"))
'[2][4][6]'
"""

from __future__ import annotations

import re
from math import gcd
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

Number = Union[int, Fraction]


class InexactDivision(ArithmeticError):
    """Raised when a quotient of Laurent polynomials is not a Laurent polynomial."""


def _norm(c: Number) -> Number:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class QPoly:
    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, Number] | None = None):
        c = {}
        if coeffs:
            for e, v in coeffs.items():
                if v:
                    c[int(e)] = _norm(v)
        self._c = c
        self._hash = None

    # construction ---------------------------------------------------------
    @classmethod
    def const(cls, c: Number) -> "QPoly":
        return cls({0: c})

    @classmethod
    def monomial(cls, e: int, c: Number = 1) -> "QPoly":
        return cls({e: c})

    @classmethod
    def from_list(cls, coeffs: Sequence[Number], shift: int = 0) -> "QPoly":
        return cls({i + shift: v for i, v in enumerate(coeffs)})

    @staticmethod
    def coerce(x) -> "QPoly":
        if isinstance(x, QPoly):
            return x
        if isinstance(x, (int, Fraction)):
            return QPoly.const(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to QPoly")

    # inspection -----------------------------------------------------------
    def items(self):
        return sorted(self._c.items())

    def coeff(self, e: int) -> Number:
        return self._c.get(e, 0)

    def __getitem__(self, e: int) -> Number:
        return self._c.get(e, 0)

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self):
        return bool(self._c)

    @property
    def degree(self) -> int | None:
        return max(self._c) if self._c else None

    @property
    def low_degree(self) -> int | None:
        return min(self._c) if self._c else None

    def is_monomial(self) -> bool:
        return len(self._c) == 1

    def is_integral(self) -> bool:
        return all(isinstance(v, int) for v in self._c.values())

    def is_nonnegative(self) -> bool:
        return all(v >= 0 for v in self._c.values())

    def is_polynomial(self) -> bool:
        return not self._c or min(self._c) >= 0

    def coefficients(self) -> list[Number]:
        """Dense coefficient list from degree 0 (polynomials only)."""
        if not self._c:
            return []
        if min(self._c) < 0:
            raise ValueError("negative exponents present")
        return [self._c.get(i, 0) for i in range(max(self._c) + 1)]

    # arithmetic -----------------------------------------------------------
    def __add__(self, other):
        try:
            other = QPoly.coerce(other)
        except TypeError:
            return NotImplemented
        c = dict(self._c)
        for e, v in other._c.items():
            c[e] = c.get(e, 0) + v
        return QPoly(c)

    __radd__ = __add__

    def __neg__(self):
        return QPoly({e: -v for e, v in self._c.items()})

    def __sub__(self, other):
        try:
            other = QPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return QPoly.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return QPoly({e: v * other for e, v in self._c.items()})
        if not isinstance(other, QPoly):
            return NotImplemented
        c: dict[int, Number] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                c[e1 + e2] = c.get(e1 + e2, 0) + v1 * v2
        return QPoly(c)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            if not self.is_monomial():
                raise InexactDivision("negative power of a non-monomial")
            (e, v), = self._c.items()
            return QPoly({e * k: Fraction(1, v) ** (-k)})
        out = QPoly.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, k: int) -> "QPoly":
        """Multiply by ``q**k``."""
        return QPoly({e + k: v for e, v in self._c.items()})

    def subs_power(self, k: int) -> "QPoly":
        """Substitute ``q -> q**k`` (``k = -1`` gives the bar involution)."""
        return QPoly({e * k: v for e, v in self._c.items()})

    def div_int(self, d: int) -> "QPoly":
        """Exact division by an integer; raises if a coefficient is not divisible."""
        c = {}
        for e, v in self._c.items():
            if isinstance(v, int) and v % d:
                raise InexactDivision(f"coefficient {v} not divisible by {d}")
            c[e] = Fraction(v, d) if isinstance(v, int) else v / d
        return QPoly(c)

    def divmod(self, other: "QPoly") -> tuple["QPoly", "QPoly"]:
        """Long division of Laurent polynomials, after normalising both to
        polynomials with nonzero constant term on the divisor."""
        other = QPoly.coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return QPoly(), QPoly()
        lb = other.low_degree
        la = self.low_degree
        a = self.shift(-la).coefficients()
        b = other.shift(-lb).coefficients()
        lead = b[-1]
        quot = [0] * max(len(a) - len(b) + 1, 0)
        rem = list(a)
        for i in range(len(quot) - 1, -1, -1):
            c = rem[i + len(b) - 1]
            if c:
                t = _norm(Fraction(c, lead)) if isinstance(c, int) and isinstance(lead, int) else c / lead
                quot[i] = t
                for j, bj in enumerate(b):
                    rem[i + j] -= t * bj
        return (QPoly.from_list(quot, la - lb), QPoly.from_list(rem, la))

    def exact_div(self, other) -> "QPoly":
        other = QPoly.coerce(other)
        if other.is_monomial():
            (e, v), = other._c.items()
            out = self.shift(-e)
            return out if v == 1 else out.div_int(v) if isinstance(v, int) else out * (1 / v)
        quot, rem = self.divmod(other)
        if rem:
            raise InexactDivision(f"{self} is not divisible by {other}")
        return quot

    # evaluation / comparison ---------------------------------------------
    def __call__(self, x):
        if isinstance(x, QPoly):
            out = QPoly()
            for e, v in self._c.items():
                out = out + (x ** e) * v
            return out
        total = 0
        for e, v in self._c.items():
            total += v * (Fraction(x) ** e if e < 0 else x ** e)
        return _norm(total) if isinstance(total, Fraction) else total

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QPoly.const(other)
        if not isinstance(other, QPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def is_palindromic(self, center2: int) -> bool:
        """Coefficient of ``q^j`` equals that of ``q^(center2 - j)``.

        ``center2`` is twice the centre, so half-integer centres stay exact.
        """
        return all(self._c.get(center2 - e, 0) == v for e, v in self._c.items())

    # text ----------------------------------------------------------------
    def __str__(self):
        return format_expanded(self)

    def __repr__(self):
        return f"QPoly('{format_expanded(self)}')"

    def to_json(self) -> dict[str, str]:
        return {str(e): str(v) for e, v in self.items()}

    @classmethod
    def from_json(cls, obj: Mapping[str, str]) -> "QPoly":
        return cls({int(e): Fraction(v) for e, v in obj.items()})


q = QPoly.monomial(1)
ONE = QPoly.const(1)
ZERO = QPoly()


def qint(k: int) -> QPoly:
    """The q-number ``[k] = 1 + q + ... + q^(k-1)``."""
    if k < 0:
        raise ValueError("q-number of a negative integer")
    return QPoly({i: 1 for i in range(k)})


def qfactorial(k: int) -> QPoly:
    out = ONE
    for i in range(2, k + 1):
        out = out * qint(i)
    return out


def qprod(ks: Iterable[int]) -> QPoly:
    out = ONE
    for k in ks:
        out = out * qint(k)
    return out


def qp_mul(a: QPoly, b: QPoly) -> QPoly:
    return a * b


def qp_gcd(a: QPoly, b: QPoly) -> QPoly:
    """Monic gcd over Q, up to the unit ``q^k``; the result has nonzero constant term."""
    a, b = QPoly.coerce(a), QPoly.coerce(b)
    if a.is_zero():
        a, b = b, a
    if a.is_zero():
        return QPoly()
    a = a.shift(-a.low_degree)
    while b:
        b = b.shift(-b.low_degree)
        a, b = b, a.divmod(b)[1]
    return a * Fraction(1, a.coeff(a.degree))


def qp_is_palindromic(p: QPoly, center: Fraction | int) -> bool:
    c2 = Fraction(center) * 2
    if c2.denominator != 1:
        raise ValueError("centre must be a half-integer")
    return p.is_palindromic(int(c2))


# ---------------------------------------------------------------------------
# matrices

class QPolyMatrix:
    """Dense rectangular grid of QPoly entries."""

    def __init__(self, entries: Sequence[Sequence]):
        self.entries = [[QPoly.coerce(x) for x in row] for row in entries]
        self.rows = len(self.entries)
        self.cols = len(self.entries[0]) if self.entries else 0
        if any(len(r) != self.cols for r in self.entries):
            raise ValueError("ragged matrix")

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "QPolyMatrix":
        return cls([[ZERO] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n: int) -> "QPolyMatrix":
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        return isinstance(other, QPolyMatrix) and self.entries == other.entries

    def transpose(self) -> "QPolyMatrix":
        return QPolyMatrix([[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)])

    def __matmul__(self, other: "QPolyMatrix") -> "QPolyMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                s = ZERO
                for k in range(self.cols):
                    a = self.entries[i][k]
                    if a:
                        b = other.entries[k][j]
                        if b:
                            s = s + a * b
                row.append(s)
            out.append(row)
        return QPolyMatrix(out)

    def apply(self, vec: Sequence[QPoly]) -> list[QPoly]:
        out = []
        for row in self.entries:
            s = ZERO
            for a, b in zip(row, vec):
                if a and b:
                    s = s + a * b
            out.append(s)
        return out

    def is_lower_triangular(self) -> bool:
        return all(not self.entries[i][j] for i in range(self.rows) for j in range(i + 1, self.cols))

    def to_json(self):
        return [[e.to_json() for e in row] for row in self.entries]

    def __repr__(self):
        return "QPolyMatrix(" + "; ".join(", ".join(map(str, r)) for r in self.entries) + ")"


def qp_solve_lower_triangular(A: QPolyMatrix, b: Sequence[QPoly]) -> list[QPoly]:
    """Solve ``A x = b`` by forward substitution.

    The diagonal must consist of monomials ``c q^k`` with ``c = +-1``;
    any step that does not divide exactly raises :class:`InexactDivision`.
    """
    n = A.rows
    if A.cols != n or len(b) != n:
        raise ValueError("shape mismatch")
    if not A.is_lower_triangular():
        raise ValueError("matrix is not lower triangular")
    x: list[QPoly] = []
    for i in range(n):
        d = A[i, i]
        if not d.is_monomial():
            raise ValueError(f"diagonal entry {d} is not a power of q")
        s = QPoly.coerce(b[i])
        for j in range(i):
            if A[i, j] and x[j]:
                s = s - A[i, j] * x[j]
        x.append(s.exact_div(d))
    return x


def qp_solve_upper_triangular(A: QPolyMatrix, b: Sequence[QPoly]) -> list[QPoly]:
    """Back substitution; reduces to the lower-triangular solver by reversing indices."""
    n = A.rows
    rev = QPolyMatrix([[A[n - 1 - i, n - 1 - j] for j in range(n)] for i in range(n)])
    return qp_solve_lower_triangular(rev, list(reversed(b)))[::-1]


def qp_det(M: Sequence[Sequence[QPoly]]) -> QPoly:
    """Bareiss fraction-free determinant over Z[q, q^-1]."""
    a = [[QPoly.coerce(x) for x in row] for row in M]
    n = len(a)
    if n == 0:
        return ONE
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if not a[k][k]:
            for r in range(k + 1, n):
                if a[r][k]:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return ZERO
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]).exact_div(prev)
        prev = a[k][k]
    return a[n - 1][n - 1] * sign


# ---------------------------------------------------------------------------
# text formats

def _fmt_coef_term(v: Number, e: int, first: bool) -> str:
    sign = "-" if v < 0 else ("" if first else "+")
    av = -v if v < 0 else v
    if e == 0:
        return f"{sign}{av}"
    mono = "q" if e == 1 else f"q^{e}" if e > 0 else f"q^{{{e}}}"
    if av == 1:
        return f"{sign}{mono}"
    return f"{sign}{av}{mono}"


def format_expanded(p: QPoly) -> str:
    if not p:
        return "0"
    return "".join(_fmt_coef_term(v, e, i == 0) for i, (e, v) in enumerate(p.items()))


def _factor_qnumbers(p: QPoly) -> tuple[int, int, list[int], QPoly]:
    """Split ``p = c q^s [k1][k2]... R`` greedily, keeping every quotient in N[q]."""
    s = p.low_degree
    r = p.shift(-s)
    c = 1
    content = 0
    for v in r._c.values():
        if not isinstance(v, int):
            return 1, s, [], r
        content = gcd(content, v)
    if content > 1 and r.is_nonnegative():
        c = content
        r = r.div_int(c)
    ks: list[int] = []
    if r.is_nonnegative():
        k = r.degree + 1
        while k >= 2:
            quot, rem = r.divmod(qint(k))
            if not rem and quot.is_nonnegative() and quot.is_integral():
                ks.append(k)
                r = quot
                k = min(k, r.degree + 1)
            else:
                k -= 1
    return c, s, sorted(ks), r


def format_qnumber(p: QPoly) -> str:
    """Compact q-number notation, e.g. ``[2][4][6]``, ``q^3[2][2]``,
    ``[2][2](1+q+2q^2)`` or a plain expansion such as ``1+3q``."""
    if not p:
        return "0"
    c, s, ks, r = _factor_qnumbers(p)
    if not ks:
        return format_expanded(p)
    pre = ""
    if c != 1:
        pre += str(c)
    if s:
        pre += "q" if s == 1 else f"q^{s}"
    body = "".join(f"[{k}]" for k in ks)
    # r keeps a nonzero constant term and unit content, so it is 1 or a real polynomial
    tail = "" if r == ONE else f"({format_expanded(r)})"
    return f"{pre}{body}{tail}"


_TOKEN = re.compile(r"\s*(?:(\d+)|(q)|(\^)|(\[)|(\])|(\()|(\))|([+-])|(\{)|(\}))")


def parse_qpoly(text: str) -> QPoly:
    """Parse expanded or q-number notation, tolerating LaTeX spacing (``\\!``)
    and braces. A blank string is the zero polynomial."""
    s = text.replace("\\!", "").replace("$", "").replace("\\,", "").strip()
    if not s:
        return ZERO
    toks: list[tuple[str, str]] = []
    pos = 0
    while pos < len(s):
        m = _TOKEN.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse {text!r} at {s[pos:]!r}")
        pos = m.end()
        kinds = ("num", "q", "^", "[", "]", "(", ")", "sign", "{", "}")
        for k, g in zip(kinds, m.groups()):
            if g is not None:
                toks.append((k, g))
                break
    toks = [t for t in toks if t[0] not in ("{", "}")]
    i = 0

    def peek():
        return toks[i][0] if i < len(toks) else None

    def expr() -> QPoly:
        nonlocal i
        total = ZERO
        sign = 1
        if peek() == "sign":
            sign = -1 if toks[i][1] == "-" else 1
            i += 1
        total = term() * sign
        while peek() == "sign":
            sign = -1 if toks[i][1] == "-" else 1
            i += 1
            total = total + term() * sign
        return total

    def term() -> QPoly:
        nonlocal i
        out = ONE
        seen = False
        while peek() in ("num", "q", "[", "("):
            seen = True
            kind = peek()
            if kind == "num":
                out = out * int(toks[i][1])
                i += 1
            elif kind == "q":
                i += 1
                e = 1
                if peek() == "^":
                    i += 1
                    neg = 1
                    if peek() == "sign":
                        neg = -1 if toks[i][1] == "-" else 1
                        i += 1
                    e = neg * int(toks[i][1])
                    i += 1
                out = out * QPoly.monomial(e)
            elif kind == "[":
                i += 1
                k = int(toks[i][1])
                i += 2
                out = out * qint(k)
            else:
                i += 1
                inner = expr()
                if peek() != ")":
                    raise ValueError(f"unbalanced parenthesis in {text!r}")
                i += 1
                out = out * inner
        if not seen:
            raise ValueError(f"empty term in {text!r}")
        return out

    val = expr()
    if i != len(toks):
        raise ValueError(f"trailing input in {text!r}")
    return val
