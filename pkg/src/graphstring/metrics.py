"""String distance and the correlation statistics used by the bench harness."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

from scipy import stats as _st

from .canonical import canonical_string
from .errors import StatisticsError
from .graph import Graph

Point = tuple[float, float]


def levenshtein(w1: str, w2: str) -> int:
    """Unit-cost edit distance, two-row dynamic programme."""
    if len(w1) < len(w2):
        w1, w2 = w2, w1
    prev = list(range(len(w2) + 1))
    for i, a in enumerate(w1, 1):
        cur = [i]
        for j, b in enumerate(w2, 1):
            cur.append(min(prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (a != b)))
        prev = cur
    return prev[-1]


def d_isalgraph(g: Graph, h: Graph, **kwargs) -> int:
    """Levenshtein distance between the canonical strings of ``g`` and ``h``."""
    return levenshtein(canonical_string(g, **kwargs).w_star, canonical_string(h, **kwargs).w_star)


def average_ranks(values: Sequence[float]) -> list[float]:
    """1-based ranks with ties sharing the mean of their positions."""
    order = sorted(range(len(values)), key=lambda i: values[i])
    ranks = [0.0] * len(values)
    i = 0
    while i < len(order):
        j = i
        while j + 1 < len(order) and values[order[j + 1]] == values[order[i]]:
            j += 1
        r = (i + j) / 2 + 1
        for k in range(i, j + 1):
            ranks[order[k]] = r
        i = j + 1
    return ranks


def _pearson(x: Sequence[float], y: Sequence[float]) -> float:
    n = len(x)
    mx = sum(x) / n
    my = sum(y) / n
    sxy = sum((a - mx) * (b - my) for a, b in zip(x, y))
    sxx = sum((a - mx) ** 2 for a in x)
    syy = sum((b - my) ** 2 for b in y)
    if sxx == 0 or syy == 0:
        raise StatisticsError("correlation undefined for constant data")
    return sxy / math.sqrt(sxx * syy)


def spearman(points: Sequence[Point]) -> tuple[float, float]:
    """Spearman rho and two-sided p-value from the t approximation with n-2 dof."""
    n = len(points)
    if n < 3:
        raise StatisticsError(f"spearman needs at least 3 points, got {n}")
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    rho = _pearson(average_ranks(xs), average_ranks(ys))
    rho = max(-1.0, min(1.0, rho))
    if abs(rho) == 1.0:
        return rho, 0.0
    t = rho * math.sqrt((n - 2) / (1 - rho * rho))
    p = 2 * _st.t.sf(abs(t), n - 2)
    return rho, min(1.0, max(0.0, float(p)))


def ols_slope(points: Sequence[Point]) -> float:
    n = len(points)
    if n < 2:
        raise StatisticsError(f"ols needs at least 2 points, got {n}")
    mx = sum(p[0] for p in points) / n
    my = sum(p[1] for p in points) / n
    sxx = sum((p[0] - mx) ** 2 for p in points)
    if sxx == 0:
        raise StatisticsError("ols slope undefined for constant x")
    return sum((p[0] - mx) * (p[1] - my) for p in points) / sxx


def ols_fit(points: Sequence[Point]) -> tuple[float, float, float]:
    """Slope, intercept and R^2 of the least-squares line."""
    beta = ols_slope(points)
    n = len(points)
    mx = sum(p[0] for p in points) / n
    my = sum(p[1] for p in points) / n
    alpha = my - beta * mx
    sst = sum((p[1] - my) ** 2 for p in points)
    sse = sum((p[1] - alpha - beta * p[0]) ** 2 for p in points)
    r2 = 1.0 if sst == 0 else 1 - sse / sst
    return beta, alpha, r2


@dataclass
class DistanceReport:
    pair_count: int
    rho: float | None
    p_value: float | None
    beta: float | None
    points: list[tuple[int, int]] = field(default_factory=list)
    note: str = ""

    @classmethod
    def from_points(cls, points: list[tuple[int, int]]) -> "DistanceReport":
        """Build a report; degenerate statistics come back as ``None`` with a note."""
        notes = []
        rho = p = beta = None
        if not points:
            notes.append("no valid pairs")
        else:
            try:
                rho, p = spearman(points)
            except StatisticsError as exc:
                notes.append(f"spearman: {exc}")
            try:
                beta = ols_slope(points)
            except StatisticsError as exc:
                notes.append(f"ols: {exc}")
        return cls(len(points), rho, p, beta, list(points), "; ".join(notes))
