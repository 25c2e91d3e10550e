"""Cross-verification of the propagation methods.

Three certificates are produced: agreement between the selective hull
and the hull of the exhaustively enumerated endpoint cloud (short
signals), per-iteration nesting of the hull inside the rigorous box with
final-box tightness, and Monte-Carlo enclosure of randomly sampled inner
signals.  Every check reports its worst-case discrepancy, pass or fail,
and a locus sufficient to reproduce a failure in isolation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .amplitude import spectrum_bounds
from .geometry import ConvexRegion, hull_of_complex, min_distance_to_point
from .intervals import IntervalSignal
from .transforms import BRUTE_FORCE_CAP, bounding_box, brute_force, selective, twiddle_row

__all__ = [
    "REL_TOL",
    "CheckResult",
    "VerificationReport",
    "region_mismatch",
    "verify_selective_vs_brute",
    "verify_hull_in_box",
    "verify_mc_enclosure",
    "verify_signal",
]

REL_TOL = 1e-9


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one verification check.

    ``discrepancy`` is the worst normalised deviation observed (reported
    for passes too); ``location`` pinpoints where it occurred, as a
    ``(k, ...)`` tuple of iteration / vertex / sample indices.
    """

    name: str
    passed: bool
    discrepancy: float
    location: tuple[int, ...] | None = None
    detail: str = ""

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": bool(self.passed),
            "discrepancy": float(self.discrepancy),
            "location": list(self.location) if self.location is not None else None,
            "detail": self.detail,
        }

    def summary_line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        where = ""
        if self.location is not None:
            where = " at (" + ", ".join(str(i) for i in self.location) + ")"
        return f"{status} {self.name}{where} discrepancy={self.discrepancy:.3e}"


@dataclass(frozen=True)
class VerificationReport:
    """Deterministically ordered collection of check results."""

    checks: tuple[CheckResult, ...]
    seed: int | None = None

    @classmethod
    def from_checks(cls, checks, seed: int | None = None) -> VerificationReport:
        ordered = sorted(checks, key=lambda c: (c.name, c.location or ()))
        return cls(checks=tuple(ordered), seed=seed)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def counts(self) -> dict[str, int]:
        n_pass = sum(1 for c in self.checks if c.passed)
        return {"total": len(self.checks), "passed": n_pass, "failed": len(self.checks) - n_pass}

    def to_dict(self) -> dict:
        return {
            "seed": self.seed,
            "passed": self.passed,
            "counts": self.counts,
            "checks": [c.to_dict() for c in self.checks],
        }

    def to_text(self) -> str:
        counts = self.counts
        lines = [
            f"verification: {counts['total']} checks, {counts['passed']} passed, "
            f"{counts['failed']} failed (seed={self.seed})"
        ]
        lines.extend("  " + c.summary_line() for c in self.checks)
        return "\n".join(lines)


def region_mismatch(a: ConvexRegion, b: ConvexRegion) -> tuple[float, tuple[int, int]]:
    """Worst distance from a vertex of either region to the other region.

    Zero (up to roundoff) exactly when the two convex regions coincide as
    sets.  Measuring vertex-to-region rather than vertex-to-vertex keeps
    the metric stable when a near-collinear vertex is kept by one hull
    and dropped by the other.  Returns the distance and ``(side,
    vertex_index)`` of the worst offender.
    """
    worst = 0.0
    loc = (0, 0)
    for side, (src, dst) in enumerate(((a, b), (b, a))):
        for i, (x, y) in enumerate(src.vertices):
            d = min_distance_to_point(dst, float(x), float(y))
            if d > worst:
                worst = d
                loc = (side, i)
    return worst, loc


def verify_selective_vs_brute(signal: IntervalSignal, k: int) -> CheckResult:
    """Compare the selective final region with the hull of the endpoint cloud."""
    cloud = brute_force(signal, k)
    brute_region = hull_of_complex(cloud.final)
    sel_region = selective(signal, k).final
    mismatch, (side, idx) = region_mismatch(sel_region, brute_region)
    scale = max(
        1.0,
        float(np.abs(sel_region.vertices).max()),
        float(np.abs(brute_region.vertices).max()),
    )
    return CheckResult(
        name="selective_vs_brute",
        passed=mismatch <= REL_TOL * scale,
        discrepancy=mismatch / scale,
        location=(int(k), side, idx),
        detail=(
            f"selective {sel_region.vertex_count} vertices vs brute hull "
            f"{brute_region.vertex_count} vertices over 2**{len(cloud)} endpoints"
        ),
    )


def verify_hull_in_box(signal: IntervalSignal, k: int) -> CheckResult:
    """Check hull-inside-box nesting per iteration and final-box tightness.

    Every hull vertex must sit inside the same iteration's box (within
    relative slack), and each of the four final box edges must be touched
    by some hull vertex; a gap would mean the box was not tight.
    """
    trace = selective(signal, k)
    boxes = bounding_box(signal, k)
    worst = -math.inf
    loc = (int(k), 0)
    for n in range(len(signal)):
        v = trace[n].vertices
        diag = math.hypot(
            boxes.re_hi[n] - boxes.re_lo[n],
            boxes.im_hi[n] - boxes.im_lo[n],
        )
        denom = 1.0 + diag
        excess = max(
            float((boxes.re_lo[n] - v[:, 0]).max()),
            float((v[:, 0] - boxes.re_hi[n]).max()),
            float((boxes.im_lo[n] - v[:, 1]).max()),
            float((v[:, 1] - boxes.im_hi[n]).max()),
        )
        if excess / denom > worst:
            worst = excess / denom
            loc = (int(k), n)

    v = trace.final.vertices
    diag = math.hypot(
        boxes.re_hi[-1] - boxes.re_lo[-1],
        boxes.im_hi[-1] - boxes.im_lo[-1],
    )
    denom = 1.0 + diag
    touch_gap = max(
        float((v[:, 0] - boxes.re_lo[-1]).min()),
        float((boxes.re_hi[-1] - v[:, 0]).min()),
        float((v[:, 1] - boxes.im_lo[-1]).min()),
        float((boxes.im_hi[-1] - v[:, 1]).min()),
    )
    if touch_gap / denom > worst:
        worst = touch_gap / denom
        loc = (int(k), len(signal) - 1)

    return CheckResult(
        name="hull_in_box",
        passed=worst <= REL_TOL,
        discrepancy=worst,
        location=loc,
        detail=f"{len(signal)} iterations, final hull {trace.final.vertex_count} vertices",
    )


def verify_mc_enclosure(
    signal: IntervalSignal,
    ks=None,
    samples: int = 10_000,
    seed: int = 0,
    chunk: int = 2048,
) -> CheckResult:
    """Sample crisp inner signals and check their amplitudes against both bounds.

    Samples are drawn uniformly and independently per interval.  The
    reported discrepancy is the worst excess beyond the allowed slack
    ``1e-9 * (1 + hi)``; any positive value is a genuine enclosure
    violation.
    """
    if samples < 1:
        raise ValueError(f"samples must be >= 1, got {samples}")
    N = len(signal)
    k_list = list(range(N // 2 + 1)) if ks is None else [int(k) for k in ks]
    sel = spectrum_bounds(signal, "selective", k_list)
    box = spectrum_bounds(signal, "box", k_list)
    weights = np.stack([twiddle_row(k, N) for k in k_list])  # (K, N)

    lo = signal.lo_array()
    hi = signal.hi_array()
    rng = np.random.default_rng(seed)

    worst = -math.inf
    loc = (k_list[0], 0)
    done = 0
    while done < samples:
        m = min(chunk, samples - done)
        x = rng.uniform(lo, hi, size=(m, N))
        amps = np.abs(x @ weights.T)  # (m, K)
        for spec in (sel, box):
            allow = REL_TOL * (1.0 + spec.hi)
            margin = np.maximum(spec.lo - amps, amps - spec.hi) - allow
            j = int(np.argmax(margin))
            value = float(margin.flat[j])
            if value > worst:
                worst = value
                loc = (k_list[j % len(k_list)], done + j // len(k_list))
        done += m

    return CheckResult(
        name="mc_enclosure",
        passed=worst <= 0.0,
        discrepancy=worst,
        location=loc,
        detail=f"{samples} samples over {len(k_list)} frequencies, both methods",
    )


def verify_signal(
    signal: IntervalSignal,
    ks=None,
    mc_samples: int = 1000,
    seed: int = 0,
) -> VerificationReport:
    """Run every applicable certificate for one signal.

    Hull-in-box nesting runs for each frequency; the brute-force
    comparison is added when the signal is short enough to enumerate; the
    Monte-Carlo check runs when ``mc_samples > 0``.  Checks are merged in
    deterministic (name, location) order.
    """
    N = len(signal)
    k_list = list(range(N // 2 + 1)) if ks is None else [int(k) for k in ks]
    checks = [verify_hull_in_box(signal, k) for k in k_list]
    if N <= BRUTE_FORCE_CAP:
        checks.extend(verify_selective_vs_brute(signal, k) for k in k_list)
    if mc_samples > 0:
        checks.append(verify_mc_enclosure(signal, k_list, mc_samples, seed))
    return VerificationReport.from_checks(checks, seed=seed)
