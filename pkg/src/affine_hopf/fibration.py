"""Affine Hopf fibrations from normalized dual Hurwitz-Radon families.

Coordinates on ``R^(N + r - 1)`` are ordered ``(x_1, ..., x_(r-1), y_1, ..., y_N)``,
horizontal first. The fiber through ``b`` in ``R^N`` is the graph
``y = B'(b) x + b``, where ``B'(b)`` drops the last column of ``B(b)``.
After normalization the last column of ``B(b)`` is ``b`` itself, so the
fiber is ``{(x, B(b) (x, 1))}``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import exact
from .errors import ConsistencyError, ExistenceError, StructuralError
from .hrcore import exists_fibration, rho
from .hrmat import DualFamily, build_hr_family, dualize, normalize, truncate_family
from .report import VerificationReport


@dataclass(frozen=True)
class AffineSubspace:
    """``base + span(directions)``; ``directions`` is ``n x p``, full column rank."""

    base: tuple
    directions: tuple

    def __post_init__(self):
        n, p = exact.shape(self.directions)
        if n != len(self.base):
            raise StructuralError(f"base has length {len(self.base)}, directions have {n} rows")
        if exact.rank(self.directions) != p:
            raise StructuralError("direction matrix is not of full column rank")

    @property
    def ambient_dim(self) -> int:
        return len(self.base)

    @property
    def dim(self) -> int:
        return exact.shape(self.directions)[1]

    def point(self, coeffs: Sequence) -> tuple:
        step = exact.matvec(self.directions, coeffs)
        return tuple(exact.simplify(b + s) for b, s in zip(self.base, step))

    def contains(self, point: Sequence) -> bool:
        if len(point) != self.ambient_dim:
            raise StructuralError(f"point has length {len(point)}, subspace lives in R^{self.ambient_dim}")
        delta = exact.column([q - b for q, b in zip(point, self.base)])
        return exact.rank(exact.hstack(self.directions, delta)) == self.dim


def pairwise_skew(A: AffineSubspace, B: AffineSubspace) -> bool:
    """Skew means disjoint with no common direction.

    Both conditions together say ``[D_A | D_B | base_B - base_A]`` has rank
    ``dim A + dim B + 1``.
    """
    if A.ambient_dim != B.ambient_dim:
        raise StructuralError(f"ambient dimensions differ: {A.ambient_dim} vs {B.ambient_dim}")
    delta = exact.column([y - x for x, y in zip(A.base, B.base)])
    stacked = exact.hstack(A.directions, B.directions, delta)
    return exact.rank(stacked) == A.dim + B.dim + 1


@dataclass(frozen=True)
class SkewFibration:
    p: int
    n: int
    dual: DualFamily

    def __post_init__(self):
        if not self.dual.normalized:
            raise StructuralError("fibration needs a normalized dual family")
        if self.dual.r - 1 != self.p or self.dual.N != self.n - self.p:
            raise StructuralError(f"dual family (N={self.dual.N}, r={self.dual.r}) does not fit ({self.p}, {self.n})")
        if self.dual.r > rho(self.dual.N):
            raise ExistenceError(f"r={self.dual.r} exceeds rho({self.dual.N})")

    @property
    def N(self) -> int:
        return self.dual.N

    @property
    def r(self) -> int:
        return self.dual.r

    @property
    def fiber_dim(self) -> int:
        return self.p

    @property
    def ambient_dim(self) -> int:
        return self.n

    def split(self, point: Sequence) -> tuple[tuple, tuple]:
        if len(point) != self.n:
            raise StructuralError(f"point has length {len(point)}, expected {self.n}")
        return tuple(point[: self.p]), tuple(point[self.p:])

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "n": self.n,
            "N": self.N,
            "r": self.r,
            "b_matrices": [[list(row) for row in m] for m in self.dual.b_matrices],
        }


def build_fibration(p: int, n: int) -> SkewFibration:
    """Affine Hopf fibration of ``R^n`` by ``p``-planes, from the family on ``R^(n-p)``."""
    if not exists_fibration(p, n):
        raise ExistenceError(
            f"R^{n} has no fibration by skew {p}-planes: p={p} > rho({n - p}) - 1 = {rho(n - p) - 1}"
        )
    N = n - p
    fam = truncate_family(build_hr_family(N), p + 1)
    return SkewFibration(p, n, normalize(dualize(fam)))


def fiber_at(fib: SkewFibration, b: Sequence) -> AffineSubspace:
    if len(b) != fib.N:
        raise StructuralError(f"b has length {len(b)}, fibration has N={fib.N}")
    B = fib.dual.at(b)
    base = (0,) * fib.p + tuple(b)
    directions = exact.vstack(exact.identity(fib.p), tuple(row[:-1] for row in B))
    return AffineSubspace(base, directions)


def sample_vectors(rng: random.Random, dim: int, bound: int = 9) -> tuple:
    return tuple(rng.randint(-bound, bound) for _ in range(dim))


def verify_fibration(fib: SkewFibration, sample_count: int, seed: int = 0) -> VerificationReport:
    """Check skewness of ``sample_count`` seeded pairs of distinct fibers.

    Each check is an exact rank certificate for that pair; the report names
    the first pair that fails.
    """
    if sample_count < 1:
        raise ValueError("sample_count must be >= 1")
    rng = random.Random(seed)
    for k in range(sample_count):
        b1 = sample_vectors(rng, fib.N)
        b2 = sample_vectors(rng, fib.N)
        while b2 == b1:
            b2 = sample_vectors(rng, fib.N)
        if not pairwise_skew(fiber_at(fib, b1), fiber_at(fib, b2)):
            return VerificationReport(
                False, k + 1, f"fibers through b1 and b2 are not skew (sample {k})", [list(b1), list(b2)]
            )
    return VerificationReport(True, sample_count, details={"p": fib.p, "n": fib.n, "seed": seed})


def fiber_system(fib: SkewFibration, x: Sequence) -> exact.Matrix:
    """``M(x)`` with ``y = M(x) b`` on the fiber through ``b``; column ``i`` is ``B_i (x, 1)``."""
    xt = tuple(x) + (1,)
    return exact.transpose([exact.matvec(Bi, xt) for Bi in fib.dual.b_matrices])


def base_point(fib: SkewFibration, point: Sequence) -> tuple:
    """The ``b`` whose fiber contains ``point``."""
    x, y = fib.split(point)
    try:
        b = exact.solve(fiber_system(fib, x), y)
    except ZeroDivisionError:
        raise ConsistencyError(f"fiber system is singular at x={list(x)}; the family is broken") from None
    return tuple(exact.simplify(v) for v in b)


def segments_tsv(subspaces: Iterable[AffineSubspace], labels: Iterable | None = None) -> str:
    """Tab-separated dump: one row per subspace with base and direction columns.

    Coordinates are ``num/den``; direction vectors are separated by ``;``.
    """
    lines = ["fiber\tbase\tdirections"]
    labels = list(labels) if labels is not None else None
    for k, s in enumerate(subspaces):
        base = ",".join(exact.fmt(v) for v in s.base)
        dirs = ";".join(",".join(exact.fmt(v) for v in col) for col in exact.transpose(s.directions))
        label = k if labels is None else labels[k]
        lines.append(f"{label}\t{base}\t{dirs}")
    return "\n".join(lines) + "\n"


def parse_point(text: str) -> tuple[Fraction, ...]:
    return tuple(exact.parse_scalar(s) for s in text.split(",") if s.strip())
