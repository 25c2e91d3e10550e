"""Amplitude bounds per frequency and assembly of the bounded spectrum.

The amplitude of a Fourier coefficient is its distance from the complex
origin, so bounds fall out of the geometry of the reachable set: the
upper bound is the farthest vertex, the lower bound is the distance from
the origin to the set (zero when the set encloses the origin).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

from .geometry import (
    ConvexRegion,
    hull_of_complex,
    max_distance_to_origin,
    min_distance_to_origin,
    min_vertex_distance_to_origin,
    origin_in_region,
)
from .intervals import ComplexInterval, IntervalSignal
from .transforms import bounding_box, brute_force, selective

__all__ = [
    "METHODS",
    "AmplitudeBounds",
    "BoundedSpectrum",
    "amplitude_bounds_selective",
    "amplitude_bounds_box",
    "spectrum_bounds",
]

METHODS = ("selective", "box", "brute")


@dataclass(frozen=True)
class AmplitudeBounds:
    """Guaranteed amplitude interval ``[lo, hi]`` for one frequency."""

    lo: float
    hi: float
    method: str
    origin_enclosed: bool

    def __post_init__(self) -> None:
        lo = float(self.lo)
        hi = float(self.hi)
        if self.method not in METHODS:
            raise ValueError(f"method must be one of {METHODS}, got {self.method!r}")
        if not (math.isfinite(lo) and math.isfinite(hi)):
            raise ValueError(f"amplitude bounds must be finite: [{self.lo!r}, {self.hi!r}]")
        if not 0.0 <= lo <= hi:
            raise ValueError(f"amplitude bounds must satisfy 0 <= lo <= hi: [{lo!r}, {hi!r}]")
        if self.origin_enclosed and lo != 0.0:
            raise ValueError(f"origin-enclosed bounds must have lo = 0, got {lo!r}")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @property
    def width(self) -> float:
        return self.hi - self.lo


def _bounds_from_region(region: ConvexRegion, method: str, vertex_min: bool) -> AmplitudeBounds:
    enclosed = origin_in_region(region)
    hi = max_distance_to_origin(region)
    if enclosed:
        lo = 0.0
    elif vertex_min:
        lo = min_vertex_distance_to_origin(region)
    else:
        lo = min_distance_to_origin(region)
    # Degenerate regions can compute lo and hi through different formulas;
    # clamp away any ulp-level inversion.
    lo = min(lo, hi)
    return AmplitudeBounds(lo=lo, hi=hi, method=method, origin_enclosed=enclosed)


def amplitude_bounds_selective(region: ConvexRegion, vertex_min: bool = False) -> AmplitudeBounds:
    """Amplitude bounds read off a convex reachable region.

    The upper bound is the farthest vertex.  The lower bound is the exact
    distance from the origin to the region, which may project onto an
    edge interior; pass ``vertex_min=True`` to use the (weaker)
    vertex-only rule instead.  A region enclosing the origin forces the
    lower bound to zero.
    """
    return _bounds_from_region(region, "selective", vertex_min)


def amplitude_bounds_box(box: ComplexInterval) -> AmplitudeBounds:
    """Amplitude bounds read off an axis-aligned reachable rectangle.

    The lower bound clamps the origin into the rectangle componentwise
    and takes the norm of the offset; the upper bound is the largest
    corner norm.  Equivalent to squaring both component intervals,
    adding, and taking the interval square root.
    """
    re = box.re
    im = box.im
    enclosed = re.contains(0.0) and im.contains(0.0)
    dx = 0.0 if re.contains(0.0) else min(abs(re.lo), abs(re.hi))
    dy = 0.0 if im.contains(0.0) else min(abs(im.lo), abs(im.hi))
    lo = math.hypot(dx, dy)
    hi = max(math.hypot(z.real, z.imag) for z in box.corners())
    return AmplitudeBounds(lo=min(lo, hi), hi=hi, method="box", origin_enclosed=enclosed)


@dataclass(frozen=True)
class BoundedSpectrum:
    """Amplitude bounds for a set of frequencies of one signal."""

    entries: tuple[tuple[int, AmplitudeBounds], ...]
    signal_length: int
    method: str
    precision: float | None = None

    def __post_init__(self) -> None:
        entries = tuple((int(k), b) for k, b in self.entries)
        if len(entries) == 0:
            raise ValueError("a bounded spectrum needs at least one entry")
        ks = [k for k, _ in entries]
        if any(b - a <= 0 for a, b in zip(ks, ks[1:])):
            raise ValueError(f"frequency indices must be strictly increasing, got {ks}")
        for k, b in entries:
            if not isinstance(b, AmplitudeBounds):
                raise TypeError(f"entry for k={k} is not AmplitudeBounds: {b!r}")
        object.__setattr__(self, "entries", entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[tuple[int, AmplitudeBounds]]:
        return iter(self.entries)

    @property
    def ks(self) -> np.ndarray:
        return np.array([k for k, _ in self.entries], dtype=int)

    @property
    def lo(self) -> np.ndarray:
        return np.array([b.lo for _, b in self.entries], dtype=float)

    @property
    def hi(self) -> np.ndarray:
        return np.array([b.hi for _, b in self.entries], dtype=float)

    @property
    def origin_enclosed(self) -> np.ndarray:
        return np.array([b.origin_enclosed for _, b in self.entries], dtype=bool)


def spectrum_bounds(
    signal: IntervalSignal,
    method: str = "box",
    ks: Iterable[int] | None = None,
    vertex_min: bool = False,
) -> BoundedSpectrum:
    """Amplitude bounds for each requested frequency of an interval signal.

    ``ks`` defaults to every non-redundant frequency ``0..N//2`` and must
    stay within that range.  ``method`` selects the propagation:
    ``"box"`` costs one linear pass per frequency, ``"selective"`` gives
    the tightest possible bounds, and ``"brute"`` (short signals only)
    exhaustively enumerates endpoints as a cross-check.
    """
    N = len(signal)
    if method not in METHODS:
        raise ValueError(f"method must be one of {METHODS}, got {method!r}")
    if ks is None:
        k_list = list(range(N // 2 + 1))
    else:
        k_list = [int(k) for k in ks]
        if not k_list:
            raise ValueError("ks must contain at least one frequency index")
        if any(b - a <= 0 for a, b in zip(k_list, k_list[1:])):
            raise ValueError(f"ks must be strictly increasing, got {k_list}")
        if k_list[0] < 0 or k_list[-1] > N // 2:
            raise ValueError(f"ks must lie within 0..{N // 2}, got {k_list[0]}..{k_list[-1]}")

    entries = []
    for k in k_list:
        if method == "box":
            bounds = amplitude_bounds_box(bounding_box(signal, k).final)
        elif method == "selective":
            bounds = _bounds_from_region(selective(signal, k).final, "selective", vertex_min)
        else:
            region = hull_of_complex(brute_force(signal, k).final)
            bounds = _bounds_from_region(region, "brute", vertex_min)
        entries.append((k, bounds))
    return BoundedSpectrum(
        entries=tuple(entries),
        signal_length=N,
        method=method,
        precision=signal.precision,
    )
