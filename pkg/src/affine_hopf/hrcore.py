"""Hurwitz-Radon function and the existence criterion for affine Hopf fibrations.

``R^n`` is fibered by pairwise skew affine ``p``-planes exactly when
``p <= rho(n - p) - 1``. A pair ``(p, n)`` is dominant when ``(p + 1, n + 1)``
fails the criterion; since ``n - p`` is unchanged this means
``p == rho(n - p) - 1``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import NamedTuple

from .errors import DomainError

# rho(2^e) for e mod 4; every further block of four adds 8.
_RHO_RESIDUE = (1, 2, 4, 8)


class DyadicDecomposition(NamedTuple):
    exponent: int
    odd_part: int


def _require_positive(N: int, name: str = "N") -> int:
    if isinstance(N, bool) or not isinstance(N, int):
        raise DomainError(f"{name} must be an integer, got {N!r}")
    if N < 1:
        raise DomainError(f"{name} must be >= 1, got {N}")
    return N


def dyadic_decompose(N: int) -> DyadicDecomposition:
    """Write ``N = 2**exponent * odd_part`` with ``odd_part`` odd."""
    _require_positive(N)
    e = (N & -N).bit_length() - 1
    return DyadicDecomposition(e, N >> e)


def rho(N: int) -> int:
    """Hurwitz-Radon number of ``N``.

    With ``N = 2^e * odd``: ``2e+1``, ``2e``, ``2e``, ``2e+2`` for
    ``e = 0, 1, 2, 3 (mod 4)``.
    """
    e = dyadic_decompose(N).exponent
    return 8 * (e // 4) + _RHO_RESIDUE[e % 4]


def _check_pair(p: int, n: int) -> None:
    _require_positive(p, "p")
    _require_positive(n, "n")
    if n <= p:
        raise DomainError(f"ambient dimension n={n} must exceed fiber dimension p={p}")


def exists_fibration(p: int, n: int) -> bool:
    _check_pair(p, n)
    return p <= rho(n - p) - 1


def is_dominant(p: int, n: int) -> bool:
    if not exists_fibration(p, n):
        raise DomainError(f"({p}, {n}) is not admissible, dominance is undefined")
    return p == rho(n - p) - 1


@dataclass(frozen=True)
class DimensionPair:
    """Fiber dimension ``p`` and ambient dimension ``n``."""

    fiber_dim: int
    ambient_dim: int

    def __post_init__(self):
        _check_pair(self.fiber_dim, self.ambient_dim)

    @property
    def admissible(self) -> bool:
        return exists_fibration(self.fiber_dim, self.ambient_dim)

    @property
    def dominant(self) -> bool:
        return is_dominant(self.fiber_dim, self.ambient_dim)


def admissible_set(n: int) -> list[int]:
    """All fiber dimensions ``p`` for which ``R^n`` has an affine Hopf fibration."""
    _require_positive(n, "n")
    # p <= rho(n-p) - 1 <= n-p-1 forces n >= 2p+1
    return [p for p in range(1, (n - 1) // 2 + 1) if exists_fibration(p, n)]


@dataclass(frozen=True)
class TableRow:
    n: int
    admissible: tuple[int, ...]
    dominant_all: tuple[int, ...]

    @property
    def dominant(self) -> int | None:
        """Largest dominant ``p`` of the row, if any."""
        return max(self.dominant_all) if self.dominant_all else None

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "admissible": list(self.admissible),
            "dominant": self.dominant,
            "dominant_all": list(self.dominant_all),
        }


def admissibility_table(n_min: int, n_max: int) -> list[TableRow]:
    if not 3 <= n_min <= n_max:
        raise DomainError(f"need 3 <= n_min <= n_max, got {n_min}, {n_max}")
    rows = []
    for n in range(n_min, n_max + 1):
        adm = admissible_set(n)
        rows.append(TableRow(n, tuple(adm), tuple(p for p in adm if is_dominant(p, n))))
    return rows


def render_table(n_min: int, n_max: int, format: str = "text") -> str:
    """Render the admissibility table for ``n_min <= n <= n_max``.

    ``text`` lists each column top-down as the tables are usually printed,
    largest ``p`` first, with dominant entries marked ``*``.
    """
    rows = admissibility_table(n_min, n_max)
    if format == "json":
        return json.dumps([r.to_dict() for r in rows]) + "\n"
    if format == "tsv":
        lines = ["n\tadmissible\tdominant\tdominant_all"]
        for r in rows:
            lines.append(
                f"{r.n}\t{','.join(map(str, r.admissible))}\t"
                f"{'' if r.dominant is None else r.dominant}\t{','.join(map(str, r.dominant_all))}"
            )
        return "\n".join(lines) + "\n"
    if format == "text":
        lines = []
        for r in rows:
            cells = [f"{p}*" if p in r.dominant_all else str(p) for p in reversed(r.admissible)]
            lines.append(f"{r.n:>4} | {' '.join(cells) if cells else '-'}")
        return "\n".join(lines) + "\n"
    raise DomainError(f"unknown table format {format!r}")
