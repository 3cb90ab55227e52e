"""Exact dense linear algebra over the integers and the rationals.

Matrices are tuples of row tuples whose entries are ``int`` or
``Fraction``. Nothing here touches floating point: rank and solve go
through fraction-free (Bareiss) elimination on integer matrices obtained by
clearing denominators row by row.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]
Vector = tuple
Matrix = tuple


def as_matrix(rows: Iterable[Iterable[Scalar]]) -> Matrix:
    return tuple(tuple(row) for row in rows)


def identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def zeros(rows: int, cols: int) -> Matrix:
    return tuple((0,) * cols for _ in range(rows))


def shape(a: Matrix) -> tuple[int, int]:
    return len(a), (len(a[0]) if a else 0)


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a))


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if shape(a)[1] != len(b):
        raise ValueError(f"cannot multiply {shape(a)} by {shape(b)}")
    cols = transpose(b)
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col) if x and y) for col in cols)
        for row in a
    )


def matvec(a: Matrix, v: Sequence[Scalar]) -> Vector:
    if shape(a)[1] != len(v):
        raise ValueError(f"cannot apply {shape(a)} matrix to vector of length {len(v)}")
    return tuple(sum(x * y for x, y in zip(row, v) if x and y) for row in a)


def add(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def scale(c: Scalar, a: Matrix) -> Matrix:
    return tuple(tuple(c * x for x in row) for row in a)


def linear_combination(coeffs: Sequence[Scalar], mats: Sequence[Matrix]) -> Matrix:
    """Return ``sum(c * M for c, M in zip(coeffs, mats))``; mats must be non-empty."""
    rows, cols = shape(mats[0])
    out = [[0] * cols for _ in range(rows)]
    for c, m in zip(coeffs, mats):
        if not c:
            continue
        for i, row in enumerate(m):
            acc = out[i]
            for j, x in enumerate(row):
                if x:
                    acc[j] += c * x
    return as_matrix(out)


def kron(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product: block (i, j) of the result is ``a[i][j] * b``."""
    return tuple(
        tuple(x * y for x in row_a for y in row_b)
        for row_a in a
        for row_b in b
    )


def hstack(*mats: Matrix) -> Matrix:
    return tuple(sum((tuple(m[i]) for m in mats), ()) for i in range(len(mats[0])))


def vstack(*mats: Matrix) -> Matrix:
    return tuple(row for m in mats for row in m)


def column(v: Sequence[Scalar]) -> Matrix:
    return tuple((x,) for x in v)


def is_signed_permutation(a: Matrix) -> bool:
    n, m = shape(a)
    if n != m:
        return False
    seen = set()
    for row in a:
        nz = [(j, x) for j, x in enumerate(row) if x]
        if len(nz) != 1 or nz[0][1] not in (1, -1) or nz[0][0] in seen:
            return False
        seen.add(nz[0][0])
    return True


def _integer_rows(a: Matrix) -> list[list[int]]:
    # Scaling a row by a nonzero constant changes neither rank nor solutions
    # once the right-hand side is scaled along with it.
    out = []
    for row in a:
        den = lcm(*(Fraction(x).denominator for x in row)) if row else 1
        out.append([int(x * den) for x in row])
    return out


def _bareiss(m: list[list[int]], ncols: int | None = None) -> list[tuple[int, int]]:
    """Fraction-free row echelon form of ``m`` in place.

    Only the first ``ncols`` columns are used as pivot candidates. Returns
    the pivot positions as ``(row, col)`` pairs.
    """
    nrows = len(m)
    width = len(m[0]) if m else 0
    ncols = width if ncols is None else ncols
    prev = 1
    r = 0
    pivots = []
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if m[i][c]), None)
        if piv is None:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
        pr = m[r]
        p = pr[c]
        for i in range(r + 1, nrows):
            row = m[i]
            q = row[c]
            if q:
                for j in range(c + 1, width):
                    row[j] = (p * row[j] - q * pr[j]) // prev
            elif p != prev:
                for j in range(c + 1, width):
                    row[j] = (p * row[j]) // prev
            row[c] = 0
        prev = p
        pivots.append((r, c))
        r += 1
    return pivots


def rank(a: Matrix) -> int:
    """Exact rank of a rational matrix."""
    if not a or not a[0]:
        return 0
    return len(_bareiss(_integer_rows(a)))


def solve(a: Matrix, y: Sequence[Scalar]) -> Vector:
    """Solve the square system ``a @ x = y`` exactly.

    Raises ``ZeroDivisionError`` when ``a`` is singular.
    """
    n, m = shape(a)
    if n != m or len(y) != n:
        raise ValueError(f"need a square system, got {shape(a)} and rhs of length {len(y)}")
    aug = _integer_rows(tuple(tuple(row) + (rhs,) for row, rhs in zip(a, y)))
    pivots = _bareiss(aug, ncols=n)
    if len(pivots) < n:
        raise ZeroDivisionError("singular matrix")
    x = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        row = aug[i]
        acc = Fraction(row[n]) - sum(row[j] * x[j] for j in range(i + 1, n))
        x[i] = acc / row[i]
    return tuple(x)


def inverse(a: Matrix) -> Matrix:
    n = len(a)
    cols = [solve(a, [int(i == j) for i in range(n)]) for j in range(n)]
    return transpose(cols)


def simplify(x: Scalar) -> Scalar:
    """Collapse integral fractions to ``int``."""
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    return x


def fmt(x: Scalar) -> str:
    """Render as ``num/den`` with the denominator always present."""
    f = Fraction(x)
    return f"{f.numerator}/{f.denominator}"


def parse_scalar(s: str) -> Fraction:
    return Fraction(s.strip())
