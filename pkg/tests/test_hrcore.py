import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from affine_hopf import (
    DimensionPair,
    DomainError,
    admissibility_table,
    admissible_set,
    dyadic_decompose,
    exists_fibration,
    is_dominant,
    render_table,
    rho,
)

SEQUENCE = [1, 2, 4, 8, 9, 10, 12, 16, 17, 18, 20, 24, 25, 26, 28, 32]


@pytest.mark.parametrize("N, expected", [(12, (2, 3)), (1, (0, 1)), (16, (4, 1))])
def test_dyadic_decompose(N, expected):
    assert tuple(dyadic_decompose(N)) == expected


@pytest.mark.parametrize("bad", [0, -3])
def test_positive_arguments_required(bad):
    with pytest.raises(DomainError):
        dyadic_decompose(bad)
    with pytest.raises(DomainError):
        rho(bad)


def test_rho_at_powers_of_two():
    assert [rho(2**k) for k in range(16)] == SEQUENCE


@pytest.mark.parametrize("N, expected", [(16, 9), (12, 4), (7, 1), (1001, 1), (40, 8)])
def test_rho_values(N, expected):
    assert rho(N) == expected


def _rho_case_rule(N):
    # independent restatement: n = exponent, case split on n mod 4
    n = 0
    while N % 2 == 0:
        N //= 2
        n += 1
    return {0: 2 * n + 1, 1: 2 * n, 2: 2 * n, 3: 2 * n + 2}[n % 4]


@given(st.integers(1, 2**20))
def test_rho_depends_on_dyadic_part_only(N):
    e, odd = dyadic_decompose(N)
    assert 2**e * odd == N and odd % 2 == 1
    assert rho(N) == rho(2**e) == _rho_case_rule(N)
    assert rho(16 * N) == rho(N) + 8


@given(st.integers(1, 2**40))
def test_rho_bounded_by_N(N):
    assert rho(N) <= N
    assert (rho(N) == N) == (N in (1, 2, 4, 8))


def test_rho_no_cap_on_size():
    assert rho(2**1000 * 3) == 8 * 250 + 1


@pytest.mark.parametrize("p, n, expected", [(1, 3, True), (1, 4, False), (8, 24, True), (7, 31, True), (9, 41, True)])
def test_exists_examples(p, n, expected):
    assert exists_fibration(p, n) is expected


@pytest.mark.parametrize("k", range(2, 8))
def test_powers_of_two_have_no_fibration(k):
    n = 2**k
    assert not any(exists_fibration(p, n) for p in range(1, n))
    assert admissible_set(n) == []


@pytest.mark.parametrize("p, n", [(0, 4), (3, 3), (5, 2)])
def test_exists_domain_errors(p, n):
    with pytest.raises(DomainError):
        exists_fibration(p, n)
    with pytest.raises(DomainError):
        DimensionPair(p, n)


@pytest.mark.parametrize("p, n, expected", [(7, 15, True), (1, 3, True), (1, 5, False), (3, 11, False)])
def test_is_dominant(p, n, expected):
    assert is_dominant(p, n) is expected
    assert DimensionPair(p, n).dominant is expected


def test_dominance_requires_admissible():
    with pytest.raises(DomainError):
        is_dominant(1, 4)


@pytest.mark.parametrize("n, expected", [(7, [1, 3]), (15, [1, 3, 7]), (80, []), (24, [8]), (41, [1, 9]), (75, [1, 3, 11])])
def test_admissible_set(n, expected):
    assert admissible_set(n) == expected


@given(st.integers(3, 400))
def test_admissible_pairs_bound_and_slice(n):
    for p in admissible_set(n):
        assert n >= 2 * p + 1
        if p >= 2:
            assert exists_fibration(p - 1, n - 1)
        # dominance has two equivalent characterizations
        nxt = exists_fibration(p + 1, n + 1)
        assert is_dominant(p, n) == (not nxt) == (p == rho(n - p) - 1)


def test_brute_force_agrees_with_admissible_set():
    for n in range(3, 120):
        assert admissible_set(n) == [p for p in range(1, n) if p <= rho(n - p) - 1]


def test_table_matches_published_tables(paper_tables):
    errata = {(e["n"], e["p"]) for e in paper_tables["errata"]}
    rows = {r.n: r for r in admissibility_table(3, 80)}
    mismatched_bold = set()
    for fixture in paper_tables["rows"]:
        row = rows[fixture["n"]]
        assert list(row.admissible) == fixture["admissible"], fixture["n"]
        for p in set(row.dominant_all) ^ set(fixture["bold"]):
            mismatched_bold.add((fixture["n"], p))
    assert mismatched_bold == errata


def test_errata_are_dominant_by_definition(paper_tables):
    for e in paper_tables["errata"]:
        p, n = e["p"], e["n"]
        assert exists_fibration(p, n) and not exists_fibration(p + 1, n + 1)
        assert e["corrected"] is is_dominant(p, n)


def test_render_text_first_table():
    text = render_table(3, 16, "text")
    lines = dict(line.split(" | ") for line in text.splitlines())
    assert lines["   3"] == "1*"
    assert lines["   4"] == "-"
    assert lines["   7"] == "3* 1*"
    assert lines["  13"] == "5 1"
    assert lines["  15"] == "7* 3* 1*"


def test_render_text_second_table():
    text = render_table(17, 32, "text")
    assert "  24 | 8*\n" in text
    assert "  31 | 7* 3* 1*\n" in text
    assert "  32 | -\n" in text


def test_render_json_schema():
    rows = json.loads(render_table(80, 80, "json"))
    assert rows == [{"n": 80, "admissible": [], "dominant": None, "dominant_all": []}]
    row15 = json.loads(render_table(15, 15, "json"))[0]
    assert row15["dominant"] == 7 and row15["dominant_all"] == [1, 3, 7]


def test_render_tsv_and_determinism():
    tsv = render_table(3, 80, "tsv")
    assert tsv == render_table(3, 80, "tsv")
    lines = tsv.strip().split("\n")
    assert lines[0].split("\t") == ["n", "admissible", "dominant", "dominant_all"]
    assert len(lines) == 79
    assert "75\t1,3,11\t11\t1,11" in lines


def test_render_rejects_bad_range():
    with pytest.raises(DomainError):
        render_table(2, 10)
    with pytest.raises(DomainError):
        render_table(10, 5)
