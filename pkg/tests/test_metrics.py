import math

import pytest
import scipy.stats
from hypothesis import assume, given, settings, strategies as st

from graphstring.errors import StatisticsError
from graphstring.generators import path
from graphstring.metrics import (DistanceReport, average_ranks, d_isalgraph, levenshtein,
                                 ols_fit, ols_slope, spearman)
from graphstring.rng import SplitMix64
from graphstring.vm import ALPHABET

words = st.text(alphabet=ALPHABET, max_size=12)


def brute_levenshtein(a, b):
    """Breadth-first search over single edits; exponential, tiny inputs only."""
    frontier = {a}
    seen = {a}
    k = 0
    while b not in frontier:
        nxt = set()
        for s in frontier:
            for i in range(len(s) + 1):
                for ch in set(ALPHABET) | set(b):
                    nxt.add(s[:i] + ch + s[i:])
                    if i < len(s):
                        nxt.add(s[:i] + ch + s[i + 1:])
                if i < len(s):
                    nxt.add(s[:i] + s[i + 1:])
        frontier = {s for s in nxt if s not in seen and len(s) <= max(len(a), len(b)) + 1}
        seen |= frontier
        k += 1
    return k


def test_levenshtein_examples():
    assert levenshtein("VNV", "VNV") == 0
    assert levenshtein("", "VNV") == 3
    assert levenshtein("VNV", "VNVNC") == brute_levenshtein("VNV", "VNVNC") == 2


@settings(max_examples=40, deadline=None)
@given(st.text(alphabet="VNC", max_size=4), st.text(alphabet="VNC", max_size=4))
def test_levenshtein_matches_brute_force(a, b):
    assert levenshtein(a, b) == brute_levenshtein(a, b)


@given(words, words, words)
def test_levenshtein_metric_axioms(a, b, c):
    dab = levenshtein(a, b)
    assert dab >= 0
    assert (dab == 0) == (a == b)
    assert dab == levenshtein(b, a)
    assert levenshtein(a, c) <= dab + levenshtein(b, c)
    assert abs(len(a) - len(b)) <= dab <= max(len(a), len(b))


def test_d_isalgraph():
    g = path(5)
    assert d_isalgraph(g, g) == 0
    assert d_isalgraph(g, g.relabel([4, 2, 0, 1, 3])) == 0
    # canonical strings "V" and "VV"
    assert d_isalgraph(path(2), path(3)) == 1


def test_spearman_examples():
    assert spearman([(1, 1), (2, 2), (3, 3), (4, 5)])[0] == pytest.approx(1.0)
    assert spearman([(1, 4), (2, 3), (3, 2), (4, 1)])[0] == pytest.approx(-1.0)
    pts = [(1, 2), (2, 1), (3, 3), (4, 4)]
    d2 = sum((x - y) ** 2 for x, y in pts)
    assert 1 - 6 * d2 / (4 * 15) == pytest.approx(0.8)
    assert spearman(pts)[0] == pytest.approx(0.8, abs=1e-12)


def test_spearman_errors():
    with pytest.raises(StatisticsError):
        spearman([(1, 2), (2, 3)])
    with pytest.raises(StatisticsError):
        spearman([(1, 2), (1, 3), (1, 4)])


def test_average_ranks_ties():
    assert average_ranks([10, 20, 20, 5]) == [2.0, 3.5, 3.5, 1.0]


def test_spearman_agrees_with_scipy():
    rng = SplitMix64(3)
    for _ in range(30):
        n = rng.randint(3, 40)
        pts = [(rng.randint(0, 6), rng.randint(0, 6)) for _ in range(n)]
        xs, ys = zip(*pts)
        if len(set(xs)) == 1 or len(set(ys)) == 1:
            continue
        ref = scipy.stats.spearmanr(xs, ys)
        rho, p = spearman(pts)
        assert rho == pytest.approx(ref.statistic, abs=1e-12)
        assert p == pytest.approx(ref.pvalue, rel=1e-9, abs=1e-15)


@given(st.lists(st.tuples(st.integers(-50, 50), st.integers(-50, 50)), min_size=3, max_size=30))
def test_spearman_rank_invariance(pts):
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    assume(len(set(xs)) > 1 and len(set(ys)) > 1)
    rho, _ = spearman(pts)
    moved = [(math.exp(x / 10), y ** 3) for x, y in pts]
    assert spearman(moved)[0] == pytest.approx(rho, abs=1e-12)
    flipped = [(-x, y) for x, y in pts]
    assert spearman(flipped)[0] == pytest.approx(-rho, abs=1e-12)


def test_ols_examples():
    assert ols_slope([(0, 0), (1, 1), (2, 2)]) == pytest.approx(1.0)
    assert ols_slope([(0, 0), (1, 2), (2, 4)]) == pytest.approx(2.0)
    assert ols_slope([(0, 0), (1, 1), (2, 1)]) == pytest.approx(0.5)
    with pytest.raises(StatisticsError):
        ols_slope([(1, 0), (1, 1)])
    beta, alpha, r2 = ols_fit([(0, 1), (1, 3), (2, 5)])
    assert (beta, alpha, r2) == pytest.approx((2.0, 1.0, 1.0))


@given(st.lists(st.tuples(st.integers(-20, 20), st.integers(-20, 20)), min_size=2, max_size=20),
       st.integers(-5, 5))
def test_ols_equivariance(pts, k):
    assume(len({p[0] for p in pts}) > 1)
    scaled = [(x, k * y) for x, y in pts]
    assert ols_slope(scaled) == pytest.approx(k * ols_slope(pts), abs=1e-9)


def test_distance_report_degenerate_cases():
    empty = DistanceReport.from_points([])
    assert empty.pair_count == 0 and empty.rho is None and "no valid pairs" in empty.note
    one = DistanceReport.from_points([(1, 2)])
    assert one.rho is None and one.beta is None
    rep = DistanceReport.from_points([(1, 1), (2, 3), (3, 2), (4, 4)])
    assert rep.pair_count == 4 and 0 <= rep.p_value <= 1
