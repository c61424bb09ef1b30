"""Exact scalars: rationals, the field Q(sqrt 3), and small exact matrix helpers.

Rationals are :class:`fractions.Fraction`. Nothing in the package touches
floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Tuple, Union

Rational = Fraction
Scalar = Union[int, Fraction, "QuadRat"]


@dataclass(frozen=True)
class QuadRat:
    """The number ``a + b*sqrt(3)`` with rational ``a`` and ``b``."""

    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        # canonical form: both parts stored as Fractions
        if type(self.a) is not Fraction:
            object.__setattr__(self, "a", Fraction(self.a))
        if type(self.b) is not Fraction:
            object.__setattr__(self, "b", Fraction(self.b))

    @staticmethod
    def coerce(x: Scalar) -> "QuadRat":
        if isinstance(x, QuadRat):
            return x
        if isinstance(x, (int, Fraction)):
            return QuadRat(Fraction(x), Fraction(0))
        raise TypeError(f"cannot interpret {x!r} as an element of Q(sqrt 3)")

    def __add__(self, other: Scalar) -> "QuadRat":
        o = QuadRat.coerce(other)
        return QuadRat(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self) -> "QuadRat":
        return QuadRat(-self.a, -self.b)

    def __sub__(self, other: Scalar) -> "QuadRat":
        return self + (-QuadRat.coerce(other))

    def __rsub__(self, other: Scalar) -> "QuadRat":
        return QuadRat.coerce(other) - self

    def __mul__(self, other: Scalar) -> "QuadRat":
        o = QuadRat.coerce(other)
        return QuadRat(self.a * o.a + 3 * self.b * o.b, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        """Field norm ``a^2 - 3 b^2``; zero only for zero."""
        return self.a * self.a - 3 * self.b * self.b

    def conjugate(self) -> "QuadRat":
        return QuadRat(self.a, -self.b)

    def __truediv__(self, other: Scalar) -> "QuadRat":
        o = QuadRat.coerce(other)
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt 3)")
        num = self * o.conjugate()
        return QuadRat(num.a / n, num.b / n)

    def __rtruediv__(self, other: Scalar) -> "QuadRat":
        return QuadRat.coerce(other) / self

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = QuadRat.coerce(other)
        if not isinstance(other, QuadRat):
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __hash__(self) -> int:
        return hash((self.a, self.b))

    def is_rational(self) -> bool:
        return self.b == 0

    def __repr__(self) -> str:
        if self.b == 0:
            return f"QuadRat({self.a})"
        return f"QuadRat({self.a} + {self.b}*sqrt3)"

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        if self.a == 0:
            return f"{self.b}*sqrt3"
        return f"{self.a}+{self.b}*sqrt3"


SQRT3 = QuadRat(0, 1)
ZERO = QuadRat()
ONE = QuadRat(1)


def quad_arith(x: QuadRat, y: QuadRat, op: str) -> QuadRat:
    """Apply ``op`` in {"add", "sub", "mul", "div"} to ``x`` and ``y``."""
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    raise ValueError(f"unknown operation {op!r}")


EucVec6 = Tuple[QuadRat, QuadRat, QuadRat, QuadRat, QuadRat, QuadRat]


def eucvec(coords: Iterable[Scalar]) -> EucVec6:
    v = tuple(QuadRat.coerce(c) for c in coords)
    if len(v) != 6:
        raise ValueError(f"EucVec6 needs exactly 6 coordinates, got {len(v)}")
    return v  # type: ignore[return-value]


def inner(v: Sequence[QuadRat], w: Sequence[QuadRat]) -> QuadRat:
    """Euclidean dot product, computed exactly."""
    if len(v) != len(w):
        raise ValueError("dimension mismatch")
    a = b = Fraction(0)
    for x, y in zip(v, w):
        if x.a:
            if y.a:
                a += x.a * y.a
            if y.b:
                b += x.a * y.b
        if x.b:
            if y.b:
                a += 3 * x.b * y.b
            if y.a:
                b += x.b * y.a
    return QuadRat(a, b)


def vec_add(v: Sequence[QuadRat], w: Sequence[QuadRat]) -> EucVec6:
    return tuple(x + y for x, y in zip(v, w))  # type: ignore[return-value]


def vec_scale(c: Scalar, v: Sequence[QuadRat]) -> EucVec6:
    return tuple(QuadRat.coerce(c) * x for x in v)  # type: ignore[return-value]


def vec_neg(v: Sequence[QuadRat]) -> EucVec6:
    return tuple(-x for x in v)  # type: ignore[return-value]


# --- exact matrices over Q -------------------------------------------------

Matrix = list  # list of lists of int/Fraction


def mat_mul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list:
    cols = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in cols] for row in a]


def mat_identity(n: int) -> list:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def kron(a: Sequence[Sequence], b: Sequence[Sequence]) -> list:
    """Kronecker product of two matrices."""
    rb, cb = len(b), len(b[0])
    out = []
    for row_a in a:
        for i in range(rb):
            out.append([x * b[i][j] for x in row_a for j in range(cb)])
    return out


def _echelon(rows: Sequence[Sequence]) -> Tuple[list, int, int]:
    """Row-reduce over Q. Returns (reduced rows, rank, sign of the row swaps)."""
    m = [[Fraction(x) for x in row] for row in rows]
    n_rows = len(m)
    n_cols = len(m[0]) if m else 0
    r = 0
    sign = 1
    for c in range(n_cols):
        piv = next((i for i in range(r, n_rows) if m[i][c] != 0), None)
        if piv is None:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
            sign = -sign
        pv = m[r][c]
        for i in range(r + 1, n_rows):
            f = m[i][c]
            if f:
                f = f / pv
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        r += 1
        if r == n_rows:
            break
    return m, r, sign


def _int_rank(rows: Sequence[Sequence[int]]) -> int:
    # fraction-free elimination on sparse rows {column: value}
    pending = [{j: x for j, x in enumerate(row) if x} for row in rows]
    pending = [r for r in pending if r]
    r = 0
    while pending:
        pivot_row = pending.pop()
        c = min(pivot_row)
        pv = pivot_row[c]
        r += 1
        nxt = []
        for row in pending:
            f = row.get(c)
            if f:
                new = {j: pv * x for j, x in row.items()}
                for j, y in pivot_row.items():
                    v = new.get(j, 0) - f * y
                    if v:
                        new[j] = v
                    else:
                        new.pop(j, None)
                if new:
                    g = math.gcd(*new.values())
                    if g > 1:
                        new = {j: x // g for j, x in new.items()}
                    nxt.append(new)
            else:
                nxt.append(row)
        pending = nxt
    return r


def rank(rows: Sequence[Sequence]) -> int:
    """Exact rank over Q."""
    if not rows:
        return 0
    if all(type(x) is int for row in rows for x in row):
        return _int_rank(rows)
    return _echelon(rows)[1]


def det(rows: Sequence[Sequence]) -> Fraction:
    """Exact determinant of a square matrix."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("determinant needs a square matrix")
    m, r, sign = _echelon(rows)
    if r < n:
        return Fraction(0)
    out = Fraction(sign)
    for i in range(n):
        out *= m[i][i]
    return out


def inverse(rows: Sequence[Sequence]) -> list:
    """Exact inverse over Q via Gauss-Jordan."""
    n = len(rows)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(rows)]
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c] != 0), None)
        if piv is None:
            raise ZeroDivisionError("matrix is singular")
        m[c], m[piv] = m[piv], m[c]
        pv = m[c][c]
        m[c] = [x / pv for x in m[c]]
        for i in range(n):
            if i != c and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return [row[n:] for row in m]
