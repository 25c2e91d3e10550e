"""Guaranteed amplitude-spectrum bounds for interval-valued signals.

The package propagates interval uncertainty through the discrete Fourier
transform three ways: exhaustive endpoint enumeration (short signals,
oracle role), selective convex-hull propagation (best-possible bounds),
and complex-interval bounding boxes (linear cost, rigorous but wider).
Amplitude bounds are read off the final reachable set per frequency, and
a verification harness cross-checks the methods against each other.
"""

from .intervals import (
    SYMMETRIC_UNIT,
    ComplexInterval,
    Interval,
    IntervalSignal,
    SegmentImage,
    complex_times_interval,
)
from .geometry import (
    POINT,
    POLYGON,
    SEGMENT,
    ConvexRegion,
    convex_hull,
    hull_of_complex,
    max_distance_to_origin,
    max_distance_to_point,
    min_distance_to_origin,
    min_distance_to_point,
    min_vertex_distance_to_origin,
    origin_in_region,
    point_in_region,
)
from .transforms import (
    BRUTE_FORCE_CAP,
    BoxTrace,
    EndpointCloud,
    HullTrace,
    ResourceLimitError,
    bounding_box,
    brute_force,
    centred_form,
    dft_coefficient,
    dft_crisp,
    selective,
    twiddle,
    twiddle_row,
)
from .amplitude import (
    METHODS,
    AmplitudeBounds,
    BoundedSpectrum,
    amplitude_bounds_box,
    amplitude_bounds_selective,
    spectrum_bounds,
)
from .verify import (
    CheckResult,
    VerificationReport,
    region_mismatch,
    verify_hull_in_box,
    verify_mc_enclosure,
    verify_selective_vs_brute,
    verify_signal,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # intervals
    "Interval",
    "ComplexInterval",
    "IntervalSignal",
    "SegmentImage",
    "SYMMETRIC_UNIT",
    "complex_times_interval",
    # geometry
    "POLYGON",
    "SEGMENT",
    "POINT",
    "ConvexRegion",
    "convex_hull",
    "hull_of_complex",
    "point_in_region",
    "origin_in_region",
    "min_distance_to_point",
    "max_distance_to_point",
    "min_distance_to_origin",
    "max_distance_to_origin",
    "min_vertex_distance_to_origin",
    # transforms
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
    # amplitude
    "METHODS",
    "AmplitudeBounds",
    "BoundedSpectrum",
    "amplitude_bounds_selective",
    "amplitude_bounds_box",
    "spectrum_bounds",
    # verify
    "CheckResult",
    "VerificationReport",
    "region_mismatch",
    "verify_selective_vs_brute",
    "verify_hull_in_box",
    "verify_mc_enclosure",
    "verify_signal",
]
