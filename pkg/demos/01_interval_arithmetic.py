"""Interval building blocks: real intervals, complex rectangles, signals.

Walks through the small arithmetic kernel that the propagation methods
are built from, and shows why the exact square matters.
"""

import numpy as np

from intervaldft import (
    ComplexInterval,
    Interval,
    IntervalSignal,
    SYMMETRIC_UNIT,
    complex_times_interval,
)

# A real interval models one sample known only to limited precision.
x = Interval(1.0, 2.0)
y = Interval(-0.5, 3.0)
print("x =", x)
print("y =", y)
print("x + y =", x + y)
print("-2 * x =", -2.0 * x)

# Squaring is exact: the range of t**2, not the naive product x * x.
wide = Interval(-2.0, 3.0)
print("\nwide =", wide)
print("wide.square() =", wide.square(), " (naive x*x would give [-6, 9])")
print("sqrt([4, 9]) =", Interval(4.0, 9.0).sqrt())

# A complex interval is an axis-aligned rectangle in the complex plane.
z1 = ComplexInterval(Interval(0, 1), Interval(0, 1))
z2 = ComplexInterval(Interval(1, 2), Interval(-1, 0))
print("\nz1 + z2 =", z1 + z2)

# Multiplying an interval by a crisp complex coefficient yields a segment;
# the rectangle around it is what the bounding-box method accumulates.
image = complex_times_interval(np.exp(-1j * np.pi / 4), Interval(0.0, 1.0))
print("\nsegment endpoints:", image.endpoints)
print("enclosing box:", image.box)

# An interval signal is an ordered sequence of interval samples.  Signals
# measured with a single instrument share one precision.
values = [0.3, -1.2, 2.7, 0.9]
signal = IntervalSignal.from_crisp(values, precision=0.25)
print("\nsignal samples:")
for n, sample in enumerate(signal):
    print(f"  x[{n}] = {sample}")
print("shared precision:", signal.precision)
print("unit uncertainty interval:", SYMMETRIC_UNIT)
