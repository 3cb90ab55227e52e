"""Hurwitz-Radon matrix families and their dual form.

A family ``A_1 = I, A_2, ..., A_r`` of ``N x N`` signed permutation
matrices with ``A_i^T A_j + A_j^T A_i = 0`` for ``i != j`` makes
``c = (a_1 A_1 + ... + a_r A_r) b`` satisfy ``|a|^2 |b|^2 = |c|^2``, a
square identity of size ``[r, N, N]``.

Construction for ``N = 2^e * odd``: the generators ``A_2, ..., A_r`` are
anticommuting skew-symmetric complex structures. Exponents 0-3 come from
the complex, quaternion (Euler four-square) and octonion multiplication
tables. Exponent ``e >= 4`` lifts the family for ``e - 4`` with the
8-generator set on ``R^16``: with ``w`` the product of those eight
generators (symmetric, ``w^2 = I``, anticommuting with each of them), the
set ``{I (x) E_j} + {F_i (x) w}`` has eight more generators than ``{F_i}``.
The odd factor repeats the ``2^e`` block along the diagonal.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from . import exact
from .errors import DomainError, NormalizationError, StructuralError
from .hrcore import dyadic_decompose, rho
from .report import VerificationReport

# Columns of the Euler four-square identity: c = (sum_j a_j A_j) b.
_EULER = (
    ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)),
    ((0, 1, 0, 0), (-1, 0, 0, 0), (0, 0, 0, -1), (0, 0, 1, 0)),
    ((0, 0, 1, 0), (0, 0, 0, 1), (-1, 0, 0, 0), (0, -1, 0, 0)),
    ((0, 0, 0, 1), (0, 0, -1, 0), (0, 1, 0, 0), (-1, 0, 0, 0)),
)

_J2 = ((0, -1), (1, 0))
_Z2 = ((1, 0), (0, -1))


def _quat_mul(p, q):
    a1, b1, c1, d1 = p
    a2, b2, c2, d2 = q
    return (
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    )


def _quat_conj(q):
    return (q[0], -q[1], -q[2], -q[3])


def _oct_mul(x, y):
    # Cayley-Dickson doubling: (a, b)(c, d) = (ac - d*b, da + bc*)
    a, b, c, d = x[:4], x[4:], y[:4], y[4:]
    left = tuple(u - v for u, v in zip(_quat_mul(a, c), _quat_mul(_quat_conj(d), b)))
    right = tuple(u + v for u, v in zip(_quat_mul(d, a), _quat_mul(b, _quat_conj(c))))
    return left + right


def _octonion_generators() -> list[exact.Matrix]:
    basis = [tuple(int(i == k) for i in range(8)) for k in range(8)]
    gens = []
    for u in basis[1:]:
        # column k is u * e_k
        gens.append(exact.transpose([_oct_mul(u, e) for e in basis]))
    return gens


def _product(mats: Sequence[exact.Matrix]) -> exact.Matrix:
    out = mats[0]
    for m in mats[1:]:
        out = exact.matmul(out, m)
    return out


@lru_cache(maxsize=None)
def _sixteen():
    """Eight generators on R^16 and their volume element."""
    gens = [exact.kron(o, _Z2) for o in _octonion_generators()]
    gens.append(exact.kron(exact.identity(8), _J2))
    return tuple(gens), _product(gens)


@lru_cache(maxsize=None)
def _generators(e: int) -> tuple[exact.Matrix, ...]:
    """Skew anticommuting complex structures on R^(2^e), ``rho(2^e) - 1`` of them."""
    if e == 0:
        return ()
    if e == 1:
        return (_J2,)
    if e == 2:
        return _EULER[1:]
    if e == 3:
        return tuple(_octonion_generators())
    lower = _generators(e - 4)
    eight, omega = _sixteen()
    eye = exact.identity(2 ** (e - 4))
    return tuple(exact.kron(eye, g) for g in eight) + tuple(exact.kron(f, omega) for f in lower)


@dataclass(frozen=True)
class HRFamily:
    N: int
    matrices: tuple

    @property
    def r(self) -> int:
        return len(self.matrices)

    def to_dict(self) -> dict:
        return {"N": self.N, "r": self.r, "matrices": [[list(row) for row in m] for m in self.matrices]}

    @classmethod
    def from_dict(cls, data: dict) -> "HRFamily":
        try:
            N = int(data["N"])
            mats = tuple(exact.as_matrix(m) for m in data["matrices"])
        except (KeyError, TypeError, ValueError) as exc:
            raise StructuralError(f"malformed family document: {exc}") from exc
        if "r" in data and int(data["r"]) != len(mats):
            raise StructuralError(f"declared r={data['r']} but {len(mats)} matrices given")
        return cls(N, mats)


def build_hr_family(N: int) -> HRFamily:
    """Maximal Hurwitz-Radon family on ``R^N``: ``rho(N)`` matrices, identity first."""
    e, odd = dyadic_decompose(N)
    block = (exact.identity(2**e),) + _generators(e)
    if odd > 1:
        eye = exact.identity(odd)
        block = tuple(exact.kron(eye, m) for m in block)
    fam = HRFamily(N, block)
    assert fam.r == rho(N)
    return fam


def truncate_family(fam: HRFamily, r_target: int) -> HRFamily:
    if not 1 <= r_target <= fam.r:
        raise DomainError(f"r_target must lie in [1, {fam.r}], got {r_target}")
    return HRFamily(fam.N, fam.matrices[:r_target])


def _signed_perm(m: exact.Matrix) -> list[tuple[int, int]]:
    return [next((j, x) for j, x in enumerate(row) if x) for row in m]


def _check_shapes(fam: HRFamily) -> None:
    if fam.r == 0:
        raise StructuralError("family is empty")
    for k, m in enumerate(fam.matrices):
        if exact.shape(m) != (fam.N, fam.N):
            raise StructuralError(f"matrix {k} has shape {exact.shape(m)}, expected ({fam.N}, {fam.N})")


def verify_hr_family(fam: HRFamily) -> VerificationReport:
    """Check every family relation exactly and report the first violation.

    Relations are checked in order: identity first, signed permutation
    structure, ``A_i^T A_i = I``, ``A_i^T A_j + A_j^T A_i = 0`` over pairs
    ``i < j`` in lexicographic order, and finally ``r <= rho(N)``.
    Products are formed on the signed-permutation representation, which is
    exact and linear in ``N``.
    """
    _check_shapes(fam)
    N = fam.N
    if fam.matrices[0] != exact.identity(N):
        return VerificationReport(False, 0, "identity first: matrices[0] is not the identity", [0])
    for k, m in enumerate(fam.matrices):
        if not exact.is_signed_permutation(m):
            return VerificationReport(False, k, f"signed permutation violated by matrix {k}", [k])
    perms = [_signed_perm(m) for m in fam.matrices]
    # For signed permutations A^T A = I holds automatically; recomputed to
    # keep the relation an explicit check.
    for k, pm in enumerate(perms):
        gram = {}
        for i, (j, s) in enumerate(pm):
            gram[j] = gram.get(j, 0) + s * s
        if any(gram.get(j) != 1 for j in range(N)):
            return VerificationReport(False, k, f"orthogonality violated by matrix {k}", [k])
    checked = 0
    for i in range(fam.r):
        for j in range(i + 1, fam.r):
            checked += 1
            # P = A_i^T A_j is again a signed permutation: P[c] = (d, sign)
            P = {c: (d, si * sj) for (c, si), (d, sj) in zip(perms[i], perms[j])}
            if any(P[d] != (c, -s) for c, (d, s) in P.items()):
                return VerificationReport(False, checked, f"anticommutation violated at ({i}, {j})", [i, j])
    if fam.r > rho(N):
        return VerificationReport(False, checked, f"family size r={fam.r} exceeds rho({N})={rho(N)}", [fam.r])
    return VerificationReport(True, checked + 2 * fam.r)


def family_combination(fam: HRFamily, a: Sequence) -> exact.Matrix:
    """``a_1 A_1 + ... + a_r A_r``."""
    if len(a) != fam.r:
        raise StructuralError(f"coefficient vector has length {len(a)}, family has r={fam.r}")
    return exact.linear_combination(a, fam.matrices)


def verify_square_identity(fam: HRFamily, a: Sequence, b: Sequence) -> bool:
    """Evaluate ``c = (sum a_j A_j) b`` and test ``|a|^2 |b|^2 == |c|^2`` exactly."""
    _check_shapes(fam)
    if len(b) != fam.N:
        raise StructuralError(f"b has length {len(b)}, family has N={fam.N}")
    a = [Fraction(x) for x in a]
    b = [Fraction(x) for x in b]
    c = exact.matvec(family_combination(fam, a), b)
    return sum(x * x for x in a) * sum(x * x for x in b) == sum(x * x for x in c)


@dataclass(frozen=True)
class DualFamily:
    """``N`` matrices ``B_k`` of shape ``N x r`` with ``B(b) = sum b_k B_k``.

    ``B(b) a`` equals ``(sum a_j A_j) b``; for a genuine family ``B(b)`` has
    rank ``r`` whenever ``b != 0``.
    """

    N: int
    r: int
    b_matrices: tuple
    normalized: bool = False

    def at(self, b: Sequence) -> exact.Matrix:
        if len(b) != self.N:
            raise StructuralError(f"b has length {len(b)}, dual family has N={self.N}")
        return exact.linear_combination(b, self.b_matrices)

    def last_columns_are_standard(self) -> bool:
        return all(
            tuple(row[-1] for row in m) == tuple(int(i == k) for i in range(self.N))
            for k, m in enumerate(self.b_matrices)
        )


def dualize(fam: HRFamily) -> DualFamily:
    """Regroup the bilinear form by ``b``: ``B_k[i][j] = A_j[i][k]``."""
    _check_shapes(fam)
    N, r = fam.N, fam.r
    cols = [exact.transpose(m) for m in fam.matrices]  # cols[j][k] is column k of A_j
    b_mats = tuple(
        tuple(tuple(cols[j][k][i] for j in range(r)) for i in range(N))
        for k in range(N)
    )
    return DualFamily(N, r, b_mats, normalized=False)


def normalize(dual: DualFamily) -> DualFamily:
    """Change ``b``-coordinates so that the last column of ``B_i`` is ``e_i``.

    With ``L`` the matrix whose column ``k`` is the last column of ``B_k``,
    the new matrices are ``sum_k (L^-1)[k][i] B_k``. ``L`` is invertible
    exactly when ``b -> B(b) e_r`` is injective, which maximal rank forces.
    """
    N = dual.N
    L = exact.as_matrix([[m[i][-1] for m in dual.b_matrices] for i in range(N)])
    if exact.is_signed_permutation(L):
        L_inv = exact.transpose(L)
    else:
        try:
            L_inv = exact.inverse(L)
        except ZeroDivisionError:
            raise NormalizationError("last-column map of the dual family is singular") from None
    new = tuple(
        tuple(tuple(exact.simplify(x) for x in row) for row in
              exact.linear_combination([L_inv[k][i] for k in range(N)], dual.b_matrices))
        for i in range(N)
    )
    return DualFamily(N, dual.r, new, normalized=True)
