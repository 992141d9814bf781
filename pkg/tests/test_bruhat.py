import json

import pytest

from bruhat_chains.bruhat import (
    Cover, NotACover, NotComparable, all_covers, bruhat_leq, cover_stats,
    covers_down, covers_up, interval, symmetry_image, verify_symmetries,
)
from bruhat_chains.permcore import all_permutations, identity, longest_element, transposition

from conftest import P, brute_length


def matrix_region_counts(v, i, j):
    """Count dots of the permutation matrix of v in the four rectangles around rows i, j."""
    n = v.n
    matrix = [[1 if v[row] == col else 0 for col in range(1, n + 1)] for row in range(1, n + 1)]
    lo, hi = v[i], v[j]

    def block(rows, cols):
        return sum(matrix[r - 1][c - 1] for r in rows for c in cols)

    middle_cols = range(lo + 1, hi)
    between_rows = range(i + 1, j)
    assert block(between_rows, middle_cols) == 0
    a = block(range(1, i), middle_cols)
    b = block(between_rows, range(hi + 1, n + 1))
    c = block(range(j + 1, n + 1), middle_cols)
    d = block(between_rows, range(1, lo))
    return a, b, c, d


def brute_covers(v):
    """Every transposition tested against the length condition."""
    out = set()
    for i in range(1, v.n):
        for j in range(i + 1, v.n + 1):
            u = v * transposition(i, j, v.n)
            if brute_length(u.window) == brute_length(v.window) + 1:
                out.add((u, i, j))
    return out


def test_cover_stats_examples():
    assert cover_stats(P("132"), 1, 3) == (0, 1, 0, 0)
    assert cover_stats(P("123"), 1, 2) == (0, 0, 0, 0)
    assert cover_stats(P("132"), 1, 2) == (0, 0, 1, 0)


@pytest.mark.parametrize("v, i, j", [("132", 2, 3), ("321", 1, 3), ("123", 1, 3), ("213", 1, 2)])
def test_cover_stats_rejects_non_covers(v, i, j):
    with pytest.raises(NotACover):
        cover_stats(P(v), i, j)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_stats_match_matrix_picture(n):
    for cov in all_covers(n):
        assert cov.stats == matrix_region_counts(cov.lower, cov.i, cov.j)


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_stat_sum_invariants(n):
    for cov in all_covers(n):
        v = cov.lower
        assert cov.b + cov.d == cov.j - cov.i - 1
        assert cov.a + cov.c == v[cov.j] - v[cov.i] - 1
        assert v[cov.i] < v[cov.j]
        assert cov.upper == v.swap_positions(cov.i, cov.j)
        assert cov.upper.length == v.length + 1


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_covers_up_matches_brute_force(n):
    for v in all_permutations(n):
        got = {(c.upper, c.i, c.j) for c in covers_up(v)}
        assert got == brute_covers(v)
        assert not got or v != longest_element(n)


def test_covers_up_examples():
    ups = covers_up(identity(3))
    assert {(str(c.upper), c.i, c.j) for c in ups} == {("213", 1, 2), ("132", 2, 3)}
    assert all(c.stats == (0, 0, 0, 0) for c in ups)
    assert covers_up(P("321")) == []
    for n in range(2, 7):
        assert len(covers_up(identity(n))) == n - 1


def test_covers_down_is_dual():
    for w in all_permutations(4):
        for cov in covers_down(w):
            assert cov in covers_up(cov.lower)


def test_interval_examples():
    full = interval(identity(3), longest_element(3))
    assert len(full) == 6 and len(full.edges) == 8
    single = interval(P("231"), P("231"))
    assert single.vertices == [P("231")] and single.edges == ()
    sub = interval(P("132"), P("321"))
    assert set(sub.vertices) == {P("132"), P("231"), P("312"), P("321")}
    assert len(sub.edges) == 4
    assert sorted(sub.ranks) == [1, 2, 3]


def test_interval_not_comparable():
    with pytest.raises(NotComparable):
        interval(P("213"), P("132"))
    with pytest.raises(NotComparable):
        interval(P("321"), P("123"))


def test_bruhat_leq_tableau_criterion():
    # independent check: v <= w iff sorted prefixes compare entrywise
    def tableau_leq(v, w):
        for k in range(1, v.n + 1):
            if any(a > b for a, b in zip(sorted(v.window[:k]), sorted(w.window[:k]))):
                return False
        return True
    perms = all_permutations(4)
    for v in perms:
        for w in perms:
            assert bruhat_leq(v, w) == tableau_leq(v, w)


def test_maximal_chain_count_s3():
    full = interval(identity(3), longest_element(3))
    counts = {longest_element(3): 1}
    for u in sorted(full.vertices, key=lambda p: -p.length)[1:]:
        counts[u] = sum(counts[c.upper] for c in full.edges if c.lower == u)
    assert counts[identity(3)] == 4


@pytest.mark.parametrize("n", [3, 4, 5])
def test_symmetry_identities(n):
    for cov in all_covers(n):
        inv = symmetry_image(cov, "inverse")
        assert (inv.d, inv.c) == (cov.a, cov.b)
        assert inv.lower == cov.lower.inverse() and inv.upper == cov.upper.inverse()
        left = symmetry_image(cov, "left_w0")
        assert left.d == cov.b
        assert left.lower == longest_element(n) * cov.upper
        right = symmetry_image(cov, "right_w0")
        assert right.c == cov.a
        assert right.lower == cov.upper * longest_element(n)


def test_symmetry_maps_are_involutions():
    for cov in all_covers(4):
        for kind in ("inverse", "left_w0", "right_w0"):
            assert symmetry_image(symmetry_image(cov, kind), kind) == cov


def test_symmetry_unknown_map():
    cov = covers_up(identity(3))[0]
    with pytest.raises(ValueError):
        symmetry_image(cov, "transpose")


def test_verify_symmetries_report():
    rep = verify_symmetries(4)
    assert rep.passed and len(rep.cases) == 3


def test_cover_json():
    cov = covers_up(P("132"))[1]
    data = json.loads(json.dumps(cov.to_json()))
    assert data == {"lower": "132", "upper": "231", "i": 1, "j": 3, "a": 0, "b": 1, "c": 0, "d": 0}
    assert isinstance(cov, Cover)
