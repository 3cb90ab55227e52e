"""Central projection of the complex and quaternionic Hopf fibrations.

A point of ``C^(m+1)`` or ``H^(m+1)`` is stored as a real vector, each
algebra coordinate contributing 2 or 4 consecutive reals. Its Hopf fiber
lies in the real span of ``z, iz`` (complex) or ``z, iz, jz, kz``
(quaternion, left multiplication). Only the ray matters for the central
projection, so points are never normalized to the sphere and everything
stays rational.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

from . import exact
from .errors import DomainError, EquatorialFiberError, StructuralError
from .fibration import AffineSubspace, pairwise_skew
from .report import VerificationReport

ALGEBRA_DIM = {"complex": 2, "quaternion": 4}


def _mul_i(c):
    a, b = c
    return (-b, a)


def _qmul_i(q):
    a, b, c, d = q
    return (-b, a, -d, c)


def _qmul_j(q):
    a, b, c, d = q
    return (-c, d, a, -b)


def _qmul_k(q):
    a, b, c, d = q
    return (-d, -c, b, a)


_UNITS = {"complex": (_mul_i,), "quaternion": (_qmul_i, _qmul_j, _qmul_k)}


@dataclass(frozen=True)
class HopfPoint:
    algebra: str
    coords: tuple

    def __post_init__(self):
        if self.algebra not in ALGEBRA_DIM:
            raise DomainError(f"unknown algebra {self.algebra!r}")
        d = ALGEBRA_DIM[self.algebra]
        if not self.coords or len(self.coords) % d:
            raise StructuralError(f"{self.algebra} point needs a multiple of {d} real coordinates")
        if not any(self.coords):
            raise DomainError("the zero vector spans no Hopf fiber")

    @property
    def d(self) -> int:
        return ALGEBRA_DIM[self.algebra]

    @property
    def m(self) -> int:
        return len(self.coords) // self.d - 1


@dataclass(frozen=True)
class GreatSubspacePlan:
    """Real span of a Hopf fiber, stored as ``d`` column vectors."""

    columns: tuple

    @property
    def matrix(self) -> exact.Matrix:
        return exact.transpose(self.columns)

    @property
    def dim(self) -> int:
        return len(self.columns)

    def same_fiber(self, other: "GreatSubspacePlan") -> bool:
        return exact.rank(exact.hstack(self.matrix, other.matrix)) == self.dim


def hopf_span(pt: HopfPoint) -> GreatSubspacePlan:
    d = pt.d
    blocks = [pt.coords[k: k + d] for k in range(0, len(pt.coords), d)]
    cols = [tuple(pt.coords)]
    for unit in _UNITS[pt.algebra]:
        cols.append(tuple(v for blk in blocks for v in unit(blk)))
    return GreatSubspacePlan(tuple(cols))


def central_project(plan: GreatSubspacePlan, chart_coord: int = -1) -> AffineSubspace:
    """Intersect the span with ``{v[chart] = 1}`` and drop the chart coordinate."""
    V = plan.matrix
    n1 = len(V)
    chart = chart_coord % n1
    w = V[chart]
    k = next((i for i, x in enumerate(w) if x), None)
    if k is None:
        raise EquatorialFiberError(f"fiber lies in the hyperplane x_{chart} = 0")
    coeff = [0] * plan.dim
    coeff[k] = Fraction(1) / w[k]
    base = exact.matvec(V, coeff)
    dirs = []
    for j in range(plan.dim):
        if j == k:
            continue
        # kernel vector of w: e_j - (w_j / w_k) e_k
        c = [0] * plan.dim
        c[j] = 1
        c[k] = -Fraction(w[j]) / w[k]
        dirs.append(exact.matvec(V, c))
    keep = [i for i in range(n1) if i != chart]
    base = tuple(exact.simplify(base[i]) for i in keep)
    directions = tuple(tuple(exact.simplify(col[i]) for col in dirs) for i in keep)
    return AffineSubspace(base, directions)


def random_hopf_point(rng: random.Random, algebra: str, m: int, chart_coord: int = -1, bound: int = 9) -> HopfPoint:
    """Seeded integer point whose fiber is not equatorial for the chart."""
    d = ALGEBRA_DIM[algebra]
    size = d * (m + 1)
    chart = chart_coord % size
    while True:
        coords = tuple(rng.randint(-bound, bound) for _ in range(size))
        if not any(coords):
            continue
        pt = HopfPoint(algebra, coords)
        if any(hopf_span(pt).matrix[chart]):
            return pt


def sample_hopf_fibration(
    algebra: str,
    m: int,
    chart_coord: int = -1,
    sample_count: int = 50,
    seed: int = 0,
    return_fibers: bool = False,
):
    """Project ``sample_count`` seeded fibers and check all distinct pairs for skewness.

    Returns a report, or ``(report, fibers)`` when ``return_fibers`` is set.
    """
    if algebra not in ALGEBRA_DIM:
        raise DomainError(f"unknown algebra {algebra!r}")
    if m < 1:
        raise DomainError(f"m must be >= 1, got {m}")
    if sample_count < 2:
        raise ValueError("sample_count must be >= 2")
    rng = random.Random(seed)
    points = [random_hopf_point(rng, algebra, m, chart_coord) for _ in range(sample_count)]
    plans = [hopf_span(pt) for pt in points]
    fibers = [central_project(pl, chart_coord) for pl in plans]
    d = ALGEBRA_DIM[algebra]
    details = {
        "algebra": algebra,
        "m": m,
        "fiber_dim": d - 1,
        "ambient_dim": d * (m + 1) - 1,
        "seed": seed,
    }
    checked = same = 0
    report = None
    for i, j in itertools.combinations(range(sample_count), 2):
        if plans[i].same_fiber(plans[j]):
            same += 1
            continue
        checked += 1
        if not pairwise_skew(fibers[i], fibers[j]):
            report = VerificationReport(
                False, checked, f"projected fibers {i} and {j} are not skew",
                [list(points[i].coords), list(points[j].coords)], details,
            )
            break
    if report is None:
        report = VerificationReport(True, checked, details={**details, "same_fiber_pairs": same})
    return (report, fibers) if return_fibers else report
