from fractions import Fraction
from itertools import permutations

import pytest
from naive import naive_pattern_exists, naive_prove, periodic_ok

from radiolab.bounds import le1_traceable_upper, t_plus_path
from radiolab.graph import consecutive, general, one_and_t, two_consecutive
from radiolab.patterns import certified_upper, verify_periodic
from radiolab.search import (
    Reason,
    SearchConfig,
    Verdict,
    exact_value,
    find_pattern,
    path_distances,
    prefix_distances,
    prove_lower,
    t_plus_exact,
)


def cfg(n=60, **kw):
    return SearchConfig(max_prefix=n, **kw)


def test_prove_lower_d12_k2():
    out = prove_lower(consecutive(2), 2, 5, cfg(12))
    assert out.verdict is Verdict.PROVEN and out.prefix_used <= 12


def test_prove_lower_d12_k2_span6_has_witness():
    out = prove_lower(consecutive(2), 2, 6, cfg(30))
    assert out.verdict is Verdict.INCONCLUSIVE and out.reason is Reason.WITNESS
    assert len(out.witness) == 30 and out.witness[0] == 0 and max(out.witness) <= 6


def test_prove_lower_d13_k2():
    assert prove_lower(one_and_t(3), 2, 5, cfg()).proven


def test_witness_is_valid_labeling():
    from radiolab.graph import distance
    out = prove_lower(two_consecutive(3), 3, 14, cfg(25))
    w = out.witness
    for i in range(len(w)):
        for j in range(i + 1, len(w)):
            assert abs(w[i] - w[j]) + distance(two_consecutive(3), i, j) > 3


def test_budget_exhaustion_is_inconclusive():
    out = prove_lower(consecutive(3), 4, 27, cfg(60, node_budget=50))
    assert out.verdict is Verdict.INCONCLUSIVE and out.reason is Reason.BUDGET and out.witness is None


@pytest.mark.parametrize("fam", [consecutive(2), one_and_t(3)], ids=str)
@pytest.mark.parametrize("k", [1, 2])
@pytest.mark.parametrize("l", [1, 3, 5])
@pytest.mark.parametrize("n", [2, 5, 7])
def test_prove_lower_matches_naive(fam, k, l, n):
    proven, used, witness = naive_prove(fam, k, l, n)
    out = prove_lower(fam, k, l, cfg(n))
    assert out.proven == proven
    assert out.prefix_used == used
    assert out.witness == witness


def test_monotonicity_samples():
    fam = two_consecutive(3)
    base = prove_lower(fam, 3, 13, cfg(40))
    assert base.proven
    for n in (base.prefix_used, base.prefix_used + 5, 80):
        assert prove_lower(fam, 3, 13, cfg(n)).proven
    for l in range(0, 13):
        assert prove_lower(fam, 3, l, cfg(base.prefix_used)).proven


def test_parallel_split_is_deterministic():
    for fam, k, l in [(two_consecutive(4), 2, 6), (two_consecutive(4), 2, 7), (one_and_t(3), 3, 11)]:
        seq = prove_lower(fam, k, l, cfg(40))
        par = prove_lower(fam, k, l, cfg(40, workers=2))
        assert (seq.verdict, seq.prefix_used, seq.witness) == (par.verdict, par.prefix_used, par.witness)


@pytest.mark.parametrize("fam, k", [(consecutive(2), 2), (consecutive(3), 3), (one_and_t(4), 3),
                                    (two_consecutive(3), 3)], ids=str)
def test_proofs_never_exceed_certified_span(fam, k):
    span, _ = certified_upper(fam, k)
    assert not prove_lower(fam, k, span, cfg(40)).proven


def brute_t_plus(dmat):
    n = len(dmat)
    return max(sum(dmat[a][b] for a, b in zip(p, p[1:])) for p in permutations(range(n)))


@pytest.mark.parametrize("n", range(2, 13))
def test_t_plus_exact_path(n):
    assert t_plus_exact(path_distances(n)).score == t_plus_path(n)


@pytest.mark.parametrize("fam", [consecutive(2), one_and_t(3), two_consecutive(3), general(2, 5)], ids=str)
@pytest.mark.parametrize("n", [2, 4, 7])
def test_t_plus_exact_matches_permutations(fam, n):
    dmat = prefix_distances(fam, n)
    res = t_plus_exact(fam, n)
    assert res.score == brute_t_plus(dmat)
    assert sorted(res.ordering) == list(range(n))
    assert sum(dmat[a][b] for a, b in zip(res.ordering, res.ordering[1:])) == res.score


def test_t_plus_example_d12():
    score = t_plus_exact(consecutive(2), 5).score
    assert score <= le1_traceable_upper(5, 1, 2) == Fraction(31, 4)


def test_t_plus_cap():
    with pytest.raises(ValueError):
        t_plus_exact(consecutive(2), 17)
    with pytest.raises(ValueError):
        t_plus_exact(consecutive(2), 1)


def test_find_pattern_examples():
    p = find_pattern(consecutive(2), 2, 6, [7])
    assert p is not None and p.span <= 6 and verify_periodic(p) is None
    assert find_pattern(consecutive(2), 2, 5) is None
    p = find_pattern(one_and_t(3), 1, 1, [4])
    assert naive_pattern_exists(one_and_t(3), 1, 1, 4)
    assert p is not None and p.labels == (0, 1, 0, 1)


@pytest.mark.parametrize("fam, k, span", [(consecutive(2), 1, 2), (one_and_t(3), 2, 5), (one_and_t(3), 2, 6),
                                          (two_consecutive(3), 2, 4), (two_consecutive(3), 2, 5),
                                          (consecutive(3), 1, 3)], ids=str)
@pytest.mark.parametrize("period", range(1, 8))
def test_find_pattern_matches_enumeration(fam, k, span, period):
    found = find_pattern(fam, k, span, [period])
    assert (found is not None) == naive_pattern_exists(fam, k, span, period)
    if found is not None:
        assert periodic_ok(fam, k, found.labels)


def test_find_pattern_needs_ceiling():
    with pytest.raises(ValueError):
        find_pattern(consecutive(2), 2)
    assert find_pattern(consecutive(2), 2, config=SearchConfig(span_ceiling=6)) is not None


@pytest.mark.parametrize("fam, k, value", [(consecutive(2), 3, 12), (one_and_t(3), 3, 11),
                                           (two_consecutive(4), 2, 7)], ids=str)
def test_exact_value_examples(fam, k, value):
    res = exact_value(fam, k)
    assert res.record.exact and res.record.lower == value
    assert verify_periodic(res.pattern) is None and res.pattern.span == value


def test_exact_value_reports_open_interval_when_starved():
    res = exact_value(consecutive(3), 5, SearchConfig(node_budget=20))
    assert not res.record.exact
    assert res.record.lower <= res.record.upper


def test_config_validation():
    with pytest.raises(ValueError):
        SearchConfig(max_prefix=0)
    with pytest.raises(ValueError):
        SearchConfig(node_budget=0)
    with pytest.raises(ValueError):
        SearchConfig(workers=0)
