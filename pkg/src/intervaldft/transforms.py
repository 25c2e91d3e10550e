"""Crisp DFT and the three interval propagation methods.

Each method consumes an :class:`~intervaldft.intervals.IntervalSignal`
and a frequency index ``k`` and produces a per-iteration representation
of the set of complex values the ``k``-th Fourier coefficient can reach:

* :func:`brute_force` keeps every partial sum over all endpoint choices,
  doubling the point count each term (exponential; oracle use only),
* :func:`selective` keeps only the convex hull of the reachable set,
  rehulling after each added term (the hull carries all bound
  information because the sum is linear),
* :func:`bounding_box` keeps the tightest axis-aligned complex
  rectangle, one interval addition per term (linear, and tight because
  no variable repeats in the sum).

Every ``(signal, k)`` computation is pure and independent; callers may
evaluate all frequencies concurrently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .geometry import ConvexRegion, hull_of_complex
from .intervals import ComplexInterval, Interval, IntervalSignal

__all__ = [
    "BRUTE_FORCE_CAP",
    "ResourceLimitError",
    "twiddle",
    "twiddle_row",
    "dft_coefficient",
    "dft_crisp",
    "EndpointCloud",
    "HullTrace",
    "BoxTrace",
    "brute_force",
    "selective",
    "bounding_box",
    "centred_form",
]

# 2**20 endpoint combinations is roughly a million points; anything above
# is refused rather than allowed to consume the machine.
BRUTE_FORCE_CAP = 20


class ResourceLimitError(RuntimeError):
    """Raised when an exhaustive enumeration would exceed the hard cap."""


def twiddle(k: int, n: int, N: int) -> complex:
    """Coefficient ``cos(theta) - i sin(theta)`` with ``theta = 2 pi k n / N``.

    The product ``k * n`` is reduced modulo ``N`` in exact integer
    arithmetic before the trigonometric evaluation, so accuracy does not
    degrade for large ``k * n``.
    """
    k = int(k)
    n = int(n)
    N = int(N)
    if N < 1:
        raise ValueError(f"signal length must be >= 1, got {N}")
    if k < 0:
        raise ValueError(f"frequency index must be >= 0, got {k}")
    if not 0 <= n < N:
        raise ValueError(f"sample index {n} outside 0..{N - 1}")
    theta = 2.0 * math.pi * ((k * n) % N) / N
    return complex(math.cos(theta), -math.sin(theta))


def twiddle_row(k: int, N: int) -> np.ndarray:
    """All coefficients for one frequency: ``twiddle(k, n, N)`` for ``n = 0..N-1``."""
    k = int(k)
    N = int(N)
    if N < 1:
        raise ValueError(f"signal length must be >= 1, got {N}")
    if k < 0:
        raise ValueError(f"frequency index must be >= 0, got {k}")
    idx = (np.arange(N, dtype=np.int64) * k) % N
    theta = 2.0 * np.pi * idx / N
    return np.cos(theta) - 1j * np.sin(theta)


def dft_coefficient(signal: Sequence[float], k: int) -> complex:
    """Single coefficient of the direct-summation DFT of a crisp signal."""
    x = np.asarray(signal, dtype=float).ravel()
    if x.size < 1:
        raise ValueError("signal must contain at least one sample")
    return complex(np.sum(x * twiddle_row(k, x.size)))


def dft_crisp(signal: Sequence[float], k_max: int | None = None) -> list[complex]:
    """Direct-summation DFT of a crisp signal for ``k = 0..k_max``.

    Any signal length is accepted; ``k_max`` defaults to ``N // 2``, the
    last non-redundant frequency of a real signal.
    """
    x = np.asarray(signal, dtype=float).ravel()
    if x.size < 1:
        raise ValueError("signal must contain at least one sample")
    if k_max is None:
        k_max = x.size // 2
    return [dft_coefficient(x, k) for k in range(int(k_max) + 1)]


@dataclass(frozen=True, eq=False)
class EndpointCloud:
    """Per-iteration sets of propagated endpoint partial sums.

    Stage ``n`` holds the ``2**(n+1)`` partial sums over every endpoint
    choice for samples ``0..n`` (duplicates are kept).
    """

    stages: tuple[np.ndarray, ...]

    def __len__(self) -> int:
        return len(self.stages)

    def __getitem__(self, n: int) -> np.ndarray:
        return self.stages[n]

    @property
    def final(self) -> np.ndarray:
        return self.stages[-1]


@dataclass(frozen=True, eq=False)
class HullTrace:
    """Per-iteration convex hulls of the reachable set."""

    stages: tuple[ConvexRegion, ...]

    def __len__(self) -> int:
        return len(self.stages)

    def __getitem__(self, n: int) -> ConvexRegion:
        return self.stages[n]

    @property
    def final(self) -> ConvexRegion:
        return self.stages[-1]


@dataclass(frozen=True, eq=False)
class BoxTrace:
    """Per-iteration tightest axis-aligned enclosures of the reachable set.

    Stored as four cumulative endpoint arrays; indexing materialises the
    :class:`ComplexInterval` for one iteration.
    """

    re_lo: np.ndarray
    re_hi: np.ndarray
    im_lo: np.ndarray
    im_hi: np.ndarray

    def __post_init__(self) -> None:
        arrays = {}
        n = None
        for name in ("re_lo", "re_hi", "im_lo", "im_hi"):
            a = np.asarray(getattr(self, name), dtype=float)
            if a.ndim != 1 or a.size < 1:
                raise ValueError(f"{name} must be a non-empty 1-d array")
            if n is None:
                n = a.size
            elif a.size != n:
                raise ValueError("endpoint arrays must share one length")
            a = a.copy()
            a.setflags(write=False)
            arrays[name] = a
        for name, a in arrays.items():
            object.__setattr__(self, name, a)

    def __len__(self) -> int:
        return self.re_lo.size

    def __getitem__(self, n: int) -> ComplexInterval:
        return ComplexInterval(
            Interval(self.re_lo[n], self.re_hi[n]),
            Interval(self.im_lo[n], self.im_hi[n]),
        )

    @property
    def final(self) -> ComplexInterval:
        return self[-1]


def brute_force(signal: IntervalSignal, k: int, limit: int | None = None) -> EndpointCloud:
    """Exhaustively propagate every endpoint combination through the sum.

    ``limit`` truncates the propagation to the first ``limit`` samples;
    it defaults to the full signal length and may not exceed
    :data:`BRUTE_FORCE_CAP` (the point count doubles per term).
    """
    N = len(signal)
    limit = N if limit is None else int(limit)
    if limit < 1:
        raise ValueError(f"limit must be >= 1, got {limit}")
    if limit > N:
        raise ValueError(f"limit {limit} exceeds signal length {N}")
    if limit > BRUTE_FORCE_CAP:
        raise ResourceLimitError(
            f"brute force over {limit} intervals means 2**{limit} endpoint "
            f"combinations; the cap is 2**{BRUTE_FORCE_CAP}"
        )
    lo = signal.lo_array()
    hi = signal.hi_array()
    w = twiddle_row(k, N)
    pts = np.array([w[0] * lo[0], w[0] * hi[0]], dtype=complex)
    stages = [pts]
    for n in range(1, limit):
        pts = np.concatenate([pts + w[n] * lo[n], pts + w[n] * hi[n]])
        stages.append(pts)
    return EndpointCloud(tuple(stages))


def selective(signal: IntervalSignal, k: int) -> HullTrace:
    """Propagate only the convex hull of the reachable set, term by term.

    Adding one term translates the previous hull by each endpoint image
    of the new sample (a Minkowski sum with a segment); rehulling the
    pooled copies discards everything interior.  The final region equals
    the convex hull of the full brute-force cloud.
    """
    N = len(signal)
    lo = signal.lo_array()
    hi = signal.hi_array()
    w = twiddle_row(k, N)
    region = hull_of_complex(np.array([w[0] * lo[0], w[0] * hi[0]]))
    stages = [region]
    for n in range(1, N):
        verts = region.as_complex()
        if lo[n] == hi[n]:
            moved = verts + w[n] * lo[n]
        else:
            moved = np.concatenate([verts + w[n] * lo[n], verts + w[n] * hi[n]])
        region = hull_of_complex(moved)
        stages.append(region)
    return HullTrace(tuple(stages))


def bounding_box(signal: IntervalSignal, k: int) -> BoxTrace:
    """Propagate the tightest axis-aligned rectangle, one interval add per term.

    Implemented as cumulative sums of the per-term componentwise endpoint
    extremes, which is arithmetic-identical to repeated complex-interval
    addition of each term's segment box.  No variable repeats in the sum,
    so the final box matches the componentwise extremes of the
    brute-force cloud exactly.
    """
    N = len(signal)
    lo = signal.lo_array()
    hi = signal.hi_array()
    w = twiddle_row(k, N)
    re_a = w.real * lo
    re_b = w.real * hi
    im_a = w.imag * lo
    im_b = w.imag * hi
    return BoxTrace(
        re_lo=np.cumsum(np.minimum(re_a, re_b)),
        re_hi=np.cumsum(np.maximum(re_a, re_b)),
        im_lo=np.cumsum(np.minimum(im_a, im_b)),
        im_hi=np.cumsum(np.maximum(im_a, im_b)),
    )


def centred_form(
    values: Sequence[float],
    precision: float,
    k: int,
    method: str = "selective",
) -> tuple[complex, ConvexRegion | ComplexInterval]:
    """Split a same-precision signal into crisp coefficient plus uncertainty set.

    Returns the crisp DFT coefficient and the zero-centred reachable set
    of the uncertainty term, a sum of ``precision * [-1, 1]`` scaled by
    each twiddle coefficient.  The uncertainty set depends only on
    ``(precision, k, N)``, never on the crisp values, so it can be
    computed once per frequency and reused across uncertainty levels;
    translating it by the crisp coefficient reproduces the direct
    interval result.
    """
    vals = np.asarray(values, dtype=float).ravel()
    if vals.size < 1:
        raise ValueError("signal must contain at least one sample")
    xi = float(precision)
    if not math.isfinite(xi) or xi < 0.0:
        raise ValueError(f"precision must be finite and nonnegative, got {precision!r}")
    z = dft_coefficient(vals, k)
    spread = IntervalSignal.from_crisp(np.zeros(vals.size), xi)
    if method == "selective":
        return z, selective(spread, k).final
    if method == "box":
        return z, bounding_box(spread, k).final
    raise ValueError(f"method must be 'selective' or 'box', got {method!r}")
