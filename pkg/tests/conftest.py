"""Shared test helpers: independent oracles and signal generators.

The oracles here deliberately avoid the library's own code paths:
``gift_wrap`` is a quadratic-time Jarvis march, ``endpoint_sums``
enumerates endpoint combinations with ``itertools.product`` and plain
``cmath`` coefficients.  They exist so the production implementations
are checked against something they do not share arithmetic with.
"""

from __future__ import annotations

import cmath
import itertools

import numpy as np

from intervaldft import IntervalSignal

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def gift_wrap(points: np.ndarray) -> np.ndarray:
    """Jarvis-march convex hull (O(M*H)), counter-clockwise vertices."""
    pts = np.unique(np.asarray(points, dtype=float), axis=0)
    m = len(pts)
    if m == 1:
        return pts
    start = min(range(m), key=lambda i: (pts[i, 0], pts[i, 1]))
    hull = [start]
    while True:
        cur = hull[-1]
        cand = None
        for j in range(m):
            if j == cur:
                continue
            if cand is None:
                cand = j
                continue
            ox, oy = pts[cur]
            ax, ay = pts[cand]
            bx, by = pts[j]
            cross = (ax - ox) * (by - oy) - (ay - oy) * (bx - ox)
            if cross < 0.0:
                cand = j
            elif cross == 0.0:
                if (bx - ox) ** 2 + (by - oy) ** 2 > (ax - ox) ** 2 + (ay - oy) ** 2:
                    cand = j
        if cand == hull[0]:
            break
        hull.append(cand)
        assert len(hull) <= m + 1, "gift wrap failed to close"
    return pts[hull]


def endpoint_sums(signal: IntervalSignal, k: int) -> np.ndarray:
    """All 2**N endpoint-combination sums, via itertools and plain cmath."""
    n_samples = len(signal)
    ws = [cmath.exp(-2j * cmath.pi * k * n / n_samples) for n in range(n_samples)]
    sums = []
    for choice in itertools.product(*[(s.lo, s.hi) for s in signal]):
        sums.append(sum(w * e for w, e in zip(ws, choice)))
    return np.array(sums, dtype=complex)


def boundary_points(region, per_edge: int = 256) -> np.ndarray:
    """Dense sampling of a region's boundary, as an (M, 2) array."""
    v = region.vertices
    if region.tag == "point":
        return np.array(v, dtype=float)
    if region.tag == "segment":
        edges = [(v[0], v[1])]
    else:
        edges = [(v[i], v[(i + 1) % len(v)]) for i in range(len(v))]
    t = np.linspace(0.0, 1.0, per_edge)[:, None]
    return np.concatenate([a + t * (b - a) for a, b in edges])


def random_interval_signal(
    rng: np.random.Generator,
    n: int,
    amp: float = 5.0,
    max_halfwidth: float = 2.0,
) -> IntervalSignal:
    mids = rng.uniform(-amp, amp, n)
    halfwidths = rng.uniform(0.0, max_halfwidth, n)
    return IntervalSignal.from_bounds(mids - halfwidths, mids + halfwidths)


def figure_style_signal(n: int = 128, seed: int = 7) -> np.ndarray:
    """Deterministic crisp base signal: a few harmonics plus noise."""
    rng = np.random.default_rng(seed)
    t = np.arange(n)
    return (
        6.0 * np.sin(2.0 * np.pi * 5.0 * t / n)
        + 3.5 * np.sin(2.0 * np.pi * 12.0 * t / n + 0.7)
        + 1.5 * np.cos(2.0 * np.pi * 29.0 * t / n)
        + rng.normal(0.0, 1.2, n)
    )
