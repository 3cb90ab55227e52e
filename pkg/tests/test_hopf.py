import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from affine_hopf import (
    DomainError,
    EquatorialFiberError,
    HopfPoint,
    central_project,
    hopf_span,
    pairwise_skew,
    sample_hopf_fibration,
)
from affine_hopf import exact

coord = st.integers(-9, 9)


def sympy_left_multiply(u, coords):
    """Left-multiply each quaternion block of coords by u (sympy oracle)."""
    U = sympy.Quaternion(*u)
    out = []
    for k in range(0, len(coords), 4):
        q = U * sympy.Quaternion(*coords[k: k + 4])
        out.extend([q.a, q.b, q.c, q.d])
    return tuple(Fraction(str(v)) for v in out)


def test_span_complex_examples():
    assert hopf_span(HopfPoint("complex", (1, 0, 1, 0))).columns == ((1, 0, 1, 0), (0, 1, 0, 1))
    assert hopf_span(HopfPoint("complex", (1, 0, 0, 0))).columns == ((1, 0, 0, 0), (0, 1, 0, 0))


def test_span_quaternion_unit_is_everything():
    plan = hopf_span(HopfPoint("quaternion", (1, 0, 0, 0)))
    assert plan.matrix == exact.identity(4)


def test_quaternion_units_match_sympy():
    z = (3, -1, 4, 1, -5, 9, 2, -6)
    plan = hopf_span(HopfPoint("quaternion", z))
    for col, unit in zip(plan.columns[1:], [(0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)]):
        assert col == sympy_left_multiply(unit, z)


def test_zero_point_rejected():
    with pytest.raises(DomainError):
        HopfPoint("complex", (0, 0, 0, 0))
    with pytest.raises(DomainError):
        HopfPoint("octonion", (1,) * 8)


@given(st.lists(coord, min_size=4, max_size=4), st.tuples(coord, coord))
def test_complex_orbit_spans_same_plane(z, u):
    if not any(z) or not any(u):
        return
    a, b = u
    uz = []
    for k in range(0, 4, 2):
        x, y = z[k], z[k + 1]
        uz.extend([a * x - b * y, a * y + b * x])
    p1 = hopf_span(HopfPoint("complex", tuple(z)))
    p2 = hopf_span(HopfPoint("complex", tuple(uz)))
    assert p1.same_fiber(p2)


@given(st.lists(coord, min_size=8, max_size=8), st.lists(coord, min_size=4, max_size=4))
@settings(max_examples=50, deadline=None)
def test_quaternion_orbit_spans_same_space(z, u):
    if not any(z) or not any(u):
        return
    uz = sympy_left_multiply(u, z)
    p1 = hopf_span(HopfPoint("quaternion", tuple(z)))
    p2 = hopf_span(HopfPoint("quaternion", uz))
    assert p1.same_fiber(p2)


def test_right_multiple_is_a_different_fiber():
    # right multiplication by j does not preserve the left orbit in general
    z = (1, 2, 0, 0, 0, 0, 3, 1)
    jz_right = []
    for k in range(0, 8, 4):
        q = sympy.Quaternion(*z[k: k + 4]) * sympy.Quaternion(0, 0, 1, 0)
        jz_right.extend([q.a, q.b, q.c, q.d])
    p1 = hopf_span(HopfPoint("quaternion", z))
    p2 = hopf_span(HopfPoint("quaternion", tuple(int(v) for v in jz_right)))
    assert not p1.same_fiber(p2)


def test_central_projection_complex_line():
    f = central_project(hopf_span(HopfPoint("complex", (1, 0, 1, 0))))
    assert f.base == (0, 1, 0)
    assert f.directions == ((1,), (0,), (1,))
    # every point {(a, 1, a)} is on it, lifted with chart coordinate 1
    assert f.contains((5, 1, 5))


def test_central_projection_equatorial():
    with pytest.raises(EquatorialFiberError):
        central_project(hopf_span(HopfPoint("complex", (1, 0, 0, 0))))


def test_central_projection_quaternion_generic():
    f = central_project(hopf_span(HopfPoint("quaternion", (2, -1, 3, 5, 1, 4, -2, 7))))
    assert (f.ambient_dim, f.dim) == (7, 3)


def test_projection_lies_in_span():
    pt = HopfPoint("quaternion", (2, -1, 3, 5, 1, 4, -2, 7))
    plan = hopf_span(pt)
    f = central_project(plan, chart_coord=5)
    rng = random.Random(0)
    for _ in range(10):
        v = f.point([Fraction(rng.randint(-5, 5), 3) for _ in range(3)])
        lifted = v[:5] + (1,) + v[5:]
        assert exact.rank(exact.hstack(plan.matrix, exact.column(lifted))) == 4


@pytest.mark.parametrize("algebra, m, p, n", [("complex", 1, 1, 3), ("complex", 3, 1, 7), ("quaternion", 1, 3, 7)])
def test_sample_dimensions(algebra, m, p, n):
    rep, fibers = sample_hopf_fibration(algebra, m, sample_count=10, seed=2, return_fibers=True)
    assert rep.passed
    assert all((f.dim, f.ambient_dim) == (p, n) for f in fibers)
    assert (rep.details["fiber_dim"], rep.details["ambient_dim"]) == (p, n)


def test_sample_complex_lines_in_r3():
    rep = sample_hopf_fibration("complex", 1, sample_count=50, seed=4)
    assert rep.passed and rep.checked == 50 * 49 // 2


def test_sample_other_chart():
    assert sample_hopf_fibration("quaternion", 1, chart_coord=0, sample_count=20, seed=1).passed


def test_same_fiber_pair_is_excluded():
    z = HopfPoint("complex", (1, 2, 3, 4))
    iz = HopfPoint("complex", (-2, 1, -4, 3))
    assert hopf_span(z).same_fiber(hopf_span(iz))
    a, b = (central_project(hopf_span(x)) for x in (z, iz))
    assert a.contains(b.base) and b.contains(a.base)
    assert exact.rank(exact.hstack(a.directions, b.directions)) == a.dim
    assert not pairwise_skew(a, b)


def test_sample_rejects_bad_arguments():
    with pytest.raises(ValueError):
        sample_hopf_fibration("complex", 1, sample_count=1)
    with pytest.raises(DomainError):
        sample_hopf_fibration("complex", 0)


def test_hopf_and_hurwitz_radon_lines_both_skew():
    from affine_hopf import build_fibration, verify_fibration

    assert sample_hopf_fibration("complex", 1, sample_count=30, seed=8).passed
    assert verify_fibration(build_fibration(1, 3), 300, seed=8).passed
