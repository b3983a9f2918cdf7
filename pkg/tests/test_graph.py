import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from radiolab.graph import (
    DistanceFamily,
    Kind,
    Separation,
    consecutive,
    distance,
    distance_consecutive,
    distance_delta,
    distance_one_and_t,
    distance_oracle,
    distance_two_consecutive,
    distance_upper_two_consecutive,
    general,
    one_and_t,
    two_consecutive,
)


def bfs_finite(dset, delta, pad):
    """Plain BFS on the integer interval [-pad, delta + pad]; independent of graph.py."""
    lo, hi = -pad, delta + pad
    seen = {0: 0}
    frontier = [0]
    while frontier:
        nxt = []
        for v in frontier:
            for s in dset:
                for u in (v - s, v + s):
                    if lo <= u <= hi and u not in seen:
                        seen[u] = seen[v] + 1
                        nxt.append(u)
        frontier = nxt
    return seen[delta]


@pytest.mark.parametrize("t, delta, expected", [(3, 7, 3), (5, 0, 0), (4, 8, 2)])
def test_distance_consecutive_examples(t, delta, expected):
    assert distance_consecutive(t, delta) == expected


def test_distance_consecutive_bfs_example():
    assert bfs_finite((1, 2, 3, 4), 8, 60) == 2


@pytest.mark.parametrize("t, delta, expected", [(5, 12, 4), (3, 3, 1), (7, 20, 4)])
def test_distance_one_and_t_examples(t, delta, expected):
    assert distance_one_and_t(t, delta) == expected


def test_distance_one_and_t_bfs_example():
    assert bfs_finite((1, 7), 20, 100) == 4


@pytest.mark.parametrize("t, delta, expected", [(3, 1, 2), (4, 4, 1), (3, 10, 4)])
def test_distance_two_consecutive_examples(t, delta, expected):
    assert distance_two_consecutive(t, delta) == expected
    assert bfs_finite((t - 1, t), delta, 60) == expected


@pytest.mark.parametrize("t, delta, expected", [(3, 10, 6), (5, 0, 5), (4, 17, 8)])
def test_distance_upper_two_consecutive_examples(t, delta, expected):
    assert distance_upper_two_consecutive(t, delta) == expected


def test_oracle_examples():
    assert distance_oracle(consecutive(3), 7) == 3
    assert distance_oracle(general(2, 3), 1) == 2
    assert distance_oracle(one_and_t(5), 5) == 1


def test_distance_dispatch_examples():
    assert distance(consecutive(2), 0, 7) == 4
    assert distance(one_and_t(3), 10, 10) == 0
    assert distance(two_consecutive(3), 0, 1) == 2


@pytest.mark.parametrize("fn", [distance_consecutive, distance_one_and_t,
                                distance_two_consecutive, distance_upper_two_consecutive])
def test_closed_forms_reject_small_t(fn):
    with pytest.raises(ValueError):
        fn(1, 3)


def test_family_invariants():
    assert consecutive(4).dset == (1, 2, 3, 4)
    assert one_and_t(5).dset == (1, 5)
    assert two_consecutive(5).dset == (4, 5)
    for fam in (consecutive(6), one_and_t(6), two_consecutive(6)):
        assert fam.maxstep == 6
    with pytest.raises(ValueError):
        general(2, 4)
    with pytest.raises(ValueError):
        DistanceFamily(Kind.GENERAL, dset=(3, 2))
    with pytest.raises(ValueError):
        DistanceFamily(Kind.GENERAL, dset=())
    with pytest.raises(ValueError):
        consecutive(1)


def test_parse():
    assert DistanceFamily.parse("one-and-t", "5") == one_and_t(5)
    assert DistanceFamily.parse("general", "2,3") == general(2, 3)
    with pytest.raises(ValueError):
        DistanceFamily.parse("bogus", 3)


def test_oracle_rejects_oversized_window():
    with pytest.raises(ValueError):
        distance_oracle(consecutive(3), 10_000, cap=100)


FAMILIES = [f(t) for t in range(2, 10) for f in (consecutive, one_and_t, two_consecutive)]


@pytest.mark.parametrize("fam", FAMILIES, ids=str)
def test_closed_form_matches_independent_bfs(fam):
    # bounded sweep here; the full delta <= 200 sweep lives in the acceptance suite
    for delta in range(0, 61):
        assert distance_delta(fam, delta) == bfs_finite(fam.dset, delta, 2 * fam.maxstep * (fam.maxstep + delta))


families = st.builds(lambda f, t: f(t), st.sampled_from([consecutive, one_and_t, two_consecutive]),
                     st.integers(2, 9))


@given(families, st.integers(0, 200))
def test_distance_at_least_ceiling(fam, delta):
    assert distance(fam, 0, delta) >= math.ceil(delta / fam.maxstep)


@given(st.integers(2, 12), st.integers(0, 500))
def test_two_consecutive_below_upper(t, delta):
    assert distance_two_consecutive(t, delta) <= distance_upper_two_consecutive(t, delta)


@given(families, st.integers(-300, 300), st.integers(-300, 300), st.integers(-10**6, 10**6))
def test_symmetry_identity_translation(fam, i, j, s):
    d = distance(fam, i, j)
    assert d == distance(fam, j, i)
    assert (d == 0) == (i == j)
    assert d == distance(fam, i + s, j + s)


@settings(max_examples=200)
@given(families, st.integers(-100, 100), st.integers(-100, 100), st.integers(-100, 100))
def test_triangle_inequality(fam, a, b, c):
    assert distance(fam, a, c) <= distance(fam, a, b) + distance(fam, b, c)


@given(st.integers(0, 10**6), st.integers(2, 50))
def test_separation(delta, t):
    s = Separation.of(delta, t)
    assert s.delta == s.q * t + s.r and 0 <= s.r < t


@pytest.mark.parametrize("dset", [(1, 2), (1, 5), (4, 5), (2, 5), (3, 7), (1, 2, 3, 4, 5, 6)])
def test_oracle_window_matches_wide_bfs(dset):
    fam = general(*dset) if dset != (1, 2, 3, 4, 5, 6) else consecutive(6)
    for delta in range(0, 60):
        assert distance_oracle(fam, delta) == bfs_finite(dset, delta, 400)
