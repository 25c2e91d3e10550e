"""Interval value types for uncertain signals.

An :class:`Interval` is a non-empty closed bounded subset of the real
line, modelling a sample known only to limited precision.  A
:class:`ComplexInterval` pairs two intervals into an axis-aligned
rectangle of the complex plane.  An :class:`IntervalSignal` is an
ordered sequence of interval samples, optionally tagged with the shared
measurement precision that produced them.

Only the arithmetic that linear propagation through a Fourier sum
requires is implemented: addition, scaling by a crisp number, the exact
square, and the square root on the nonnegative domain.  General
interval-by-interval multiplication and division are intentionally
absent.

All types are immutable and every operation is pure, so they are safe
to share across concurrent workers without synchronisation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, NamedTuple, Sequence

import numpy as np

__all__ = [
    "Interval",
    "ComplexInterval",
    "IntervalSignal",
    "SegmentImage",
    "SYMMETRIC_UNIT",
    "complex_times_interval",
]

_PRECISION_RTOL = 1e-9


@dataclass(frozen=True)
class Interval:
    """Closed bounded interval ``[lo, hi]`` with ``lo <= hi`` and finite endpoints.

    Construction is strict: NaN, infinities and reversed endpoints raise
    ``ValueError`` instead of being silently repaired, so ingestion bugs
    surface at the boundary rather than as quietly wrong bounds later.
    """

    lo: float
    hi: float

    def __post_init__(self) -> None:
        lo = float(self.lo)
        hi = float(self.hi)
        if not (math.isfinite(lo) and math.isfinite(hi)):
            raise ValueError(f"interval endpoints must be finite: [{self.lo!r}, {self.hi!r}]")
        if lo > hi:
            raise ValueError(f"reversed interval endpoints: lo={lo!r} > hi={hi!r}")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @classmethod
    def point(cls, value: float) -> Interval:
        """Degenerate interval holding a single value."""
        return cls(value, value)

    @classmethod
    def around(cls, value: float, halfwidth: float) -> Interval:
        """Interval ``[value - halfwidth, value + halfwidth]``."""
        if not halfwidth >= 0.0:
            raise ValueError(f"halfwidth must be nonnegative, got {halfwidth!r}")
        return cls(value - halfwidth, value + halfwidth)

    @property
    def width(self) -> float:
        return self.hi - self.lo

    @property
    def mid(self) -> float:
        return 0.5 * (self.lo + self.hi)

    def contains(self, value: float, tol: float = 0.0) -> bool:
        return self.lo - tol <= value <= self.hi + tol

    def contains_interval(self, other: Interval, tol: float = 0.0) -> bool:
        return self.lo - tol <= other.lo and other.hi <= self.hi + tol

    def __add__(self, other: Interval) -> Interval:
        """``[a, b] + [c, d] = [a + c, b + d]``."""
        if not isinstance(other, Interval):
            return NotImplemented
        return Interval(self.lo + other.lo, self.hi + other.hi)

    def scale(self, factor: float) -> Interval:
        """Image of the interval under multiplication by a crisp real number.

        Positive factors keep the endpoint order, negative factors swap
        it, and zero collapses to ``[0, 0]`` (the pointwise image, which
        also keeps inclusion isotonicity).
        """
        a = float(factor)
        if not math.isfinite(a):
            raise ValueError(f"scale factor must be finite, got {factor!r}")
        if a > 0.0:
            return Interval(a * self.lo, a * self.hi)
        if a < 0.0:
            return Interval(a * self.hi, a * self.lo)
        return Interval(0.0, 0.0)

    def __mul__(self, factor: float) -> Interval:
        if isinstance(factor, Interval):
            raise TypeError(
                "interval-by-interval multiplication is not supported; "
                "only scaling by a crisp number is defined"
            )
        return self.scale(factor)

    __rmul__ = __mul__

    def square(self) -> Interval:
        """Exact range of ``t**2`` over the interval (tight, unlike ``x * x``)."""
        if self.lo >= 0.0:
            return Interval(self.lo * self.lo, self.hi * self.hi)
        if self.hi < 0.0:
            return Interval(self.hi * self.hi, self.lo * self.lo)
        return Interval(0.0, max(self.lo * self.lo, self.hi * self.hi))

    def sqrt(self) -> Interval:
        """Range of ``sqrt(t)`` over a nonnegative interval.

        An interval reaching below zero is a domain error here; amplitudes
        are sums of squares, so a negative lower bound signals a logic bug
        upstream rather than legitimate data.
        """
        if self.lo < 0.0:
            raise ValueError(f"sqrt of an interval reaching below zero: {self!r}")
        return Interval(math.sqrt(self.lo), math.sqrt(self.hi))

    def __repr__(self) -> str:
        return f"Interval[{self.lo!r}, {self.hi!r}]"


SYMMETRIC_UNIT = Interval(-1.0, 1.0)


@dataclass(frozen=True)
class ComplexInterval:
    """Axis-aligned rectangle of the complex plane: a real and an imaginary interval."""

    re: Interval
    im: Interval

    def __post_init__(self) -> None:
        if not isinstance(self.re, Interval) or not isinstance(self.im, Interval):
            raise TypeError("ComplexInterval components must be Interval instances")

    @classmethod
    def point(cls, z: complex) -> ComplexInterval:
        z = complex(z)
        return cls(Interval.point(z.real), Interval.point(z.imag))

    def __add__(self, other: ComplexInterval) -> ComplexInterval:
        """Componentwise interval addition of two rectangles."""
        if not isinstance(other, ComplexInterval):
            return NotImplemented
        return ComplexInterval(self.re + other.re, self.im + other.im)

    def translated(self, z: complex) -> ComplexInterval:
        return self + ComplexInterval.point(z)

    def corners(self) -> tuple[complex, complex, complex, complex]:
        """The four corner points, counter-clockwise from ``(re.lo, im.lo)``."""
        return (
            complex(self.re.lo, self.im.lo),
            complex(self.re.hi, self.im.lo),
            complex(self.re.hi, self.im.hi),
            complex(self.re.lo, self.im.hi),
        )

    def contains(self, z: complex, tol: float = 0.0) -> bool:
        z = complex(z)
        return self.re.contains(z.real, tol) and self.im.contains(z.imag, tol)

    @property
    def diagonal(self) -> float:
        return math.hypot(self.re.width, self.im.width)

    def __repr__(self) -> str:
        return f"ComplexInterval(re={self.re!r}, im={self.im!r})"


class SegmentImage(NamedTuple):
    """Image of an interval under multiplication by a crisp complex coefficient.

    The true image is the straight segment between the two endpoint
    products; ``box`` is its tightest axis-aligned enclosure, which is
    exact only when the coefficient is purely real or purely imaginary.
    Callers pick whichever representation they need.
    """

    endpoints: tuple[complex, complex]
    box: ComplexInterval


def complex_times_interval(coefficient: complex, x: Interval) -> SegmentImage:
    """Multiply a real interval by a crisp complex number.

    Returns both the segment endpoints ``(c * lo, c * hi)`` and the
    enclosing :class:`ComplexInterval` built from componentwise scaling.
    """
    c = complex(coefficient)
    if not (math.isfinite(c.real) and math.isfinite(c.imag)):
        raise ValueError(f"coefficient must be finite, got {coefficient!r}")
    endpoints = (c * x.lo, c * x.hi)
    box = ComplexInterval(x.scale(c.real), x.scale(c.imag))
    return SegmentImage(endpoints, box)


@dataclass(frozen=True)
class IntervalSignal:
    """Ordered sequence of interval samples, optionally sharing one precision.

    ``precision`` records the half-width common to every sample when the
    signal came from crisp measurements taken with a single instrument;
    it stays ``None`` for signals whose widths vary per sample.  When a
    precision is given, every sample width is checked against it (within
    representation tolerance).
    """

    samples: tuple[Interval, ...]
    precision: float | None = None

    def __post_init__(self) -> None:
        samples = tuple(self.samples)
        if len(samples) == 0:
            raise ValueError("an interval signal needs at least one sample")
        for i, s in enumerate(samples):
            if not isinstance(s, Interval):
                raise TypeError(f"sample {i} is not an Interval: {s!r}")
        object.__setattr__(self, "samples", samples)
        if self.precision is not None:
            xi = float(self.precision)
            if not math.isfinite(xi) or xi < 0.0:
                raise ValueError(f"precision must be finite and nonnegative, got {self.precision!r}")
            tol = _PRECISION_RTOL * (1.0 + 2.0 * xi)
            for i, s in enumerate(samples):
                if abs(s.width - 2.0 * xi) > tol:
                    raise ValueError(
                        f"sample {i} has width {s.width!r}, "
                        f"inconsistent with shared precision {xi!r}"
                    )
            object.__setattr__(self, "precision", xi)

    @classmethod
    def from_bounds(cls, lows: Sequence[float], highs: Sequence[float]) -> IntervalSignal:
        """Build a signal from parallel sequences of lower and upper endpoints."""
        lows = list(lows)
        highs = list(highs)
        if len(lows) != len(highs):
            raise ValueError(f"got {len(lows)} lower and {len(highs)} upper endpoints")
        return cls(tuple(Interval(lo, hi) for lo, hi in zip(lows, highs)))

    @classmethod
    def from_crisp(cls, values: Sequence[float], precision: float = 0.0) -> IntervalSignal:
        """Widen crisp samples by a shared precision: ``[x - xi, x + xi]``."""
        xi = float(precision)
        if not math.isfinite(xi) or xi < 0.0:
            raise ValueError(f"precision must be finite and nonnegative, got {precision!r}")
        return cls(
            tuple(Interval(float(v) - xi, float(v) + xi) for v in values),
            precision=xi,
        )

    def __len__(self) -> int:
        return len(self.samples)

    def __iter__(self) -> Iterator[Interval]:
        return iter(self.samples)

    def __getitem__(self, index):
        return self.samples[index]

    def lo_array(self) -> np.ndarray:
        return np.fromiter((s.lo for s in self.samples), dtype=float, count=len(self.samples))

    def hi_array(self) -> np.ndarray:
        return np.fromiter((s.hi for s in self.samples), dtype=float, count=len(self.samples))

    def mid_array(self) -> np.ndarray:
        return np.fromiter((s.mid for s in self.samples), dtype=float, count=len(self.samples))

    def width_array(self) -> np.ndarray:
        return np.fromiter((s.width for s in self.samples), dtype=float, count=len(self.samples))
