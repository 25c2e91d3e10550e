"""Planar convex geometry for reachable sets in the complex plane.

Regions are convex polygons stored as counter-clockwise vertex arrays
with explicit degeneracy tags for segments and single points.  Hulls are
built with Andrew's monotone chain, so construction costs O(M log M) in
the number of input points and the output is deterministic:
counter-clockwise, starting from the lexicographically smallest vertex.

Tolerances are relative to the magnitude of the coordinates involved:
cross products are compared against ``1e-12 * scale**2`` and coincident
points are merged below ``1e-12 * scale``, so behaviour is invariant
under positive rescaling of the data.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
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
]

POLYGON = "polygon"
SEGMENT = "segment"
POINT = "point"

MERGE_REL = 1e-12
CROSS_REL = 1e-12


@dataclass(frozen=True, eq=False)
class ConvexRegion:
    """Convex region of the plane: polygon, segment, or single point.

    ``vertices`` is a read-only ``(V, 2)`` float array.  For polygons the
    vertices are in strictly convex position, counter-clockwise, starting
    at the lexicographically smallest one; segments carry exactly two
    vertices and points exactly one.
    """

    vertices: np.ndarray
    tag: str

    def __post_init__(self) -> None:
        v = np.array(self.vertices, dtype=float)
        if v.ndim != 2 or v.shape[1] != 2 or v.shape[0] == 0:
            raise ValueError(f"vertices must be a non-empty (V, 2) array, got shape {v.shape}")
        if not np.isfinite(v).all():
            raise ValueError("region vertices must be finite")
        n = v.shape[0]
        if self.tag == POINT and n != 1:
            raise ValueError(f"point region must have 1 vertex, got {n}")
        if self.tag == SEGMENT and n != 2:
            raise ValueError(f"segment region must have 2 vertices, got {n}")
        if self.tag == POLYGON and n < 3:
            raise ValueError(f"polygon region must have >= 3 vertices, got {n}")
        if self.tag not in (POLYGON, SEGMENT, POINT):
            raise ValueError(f"unknown region tag {self.tag!r}")
        v.setflags(write=False)
        object.__setattr__(self, "vertices", v)

    @property
    def vertex_count(self) -> int:
        return self.vertices.shape[0]

    def as_complex(self) -> np.ndarray:
        """Vertices as complex numbers ``x + iy``."""
        return self.vertices[:, 0] + 1j * self.vertices[:, 1]

    def translated(self, dx: float, dy: float) -> ConvexRegion:
        """Shift by a vector; canonical ordering is preserved."""
        return ConvexRegion(self.vertices + np.array([dx, dy]), self.tag)

    def scaled(self, factor: float) -> ConvexRegion:
        """Scale about the origin by a positive factor."""
        if not factor > 0.0:
            raise ValueError(f"scale factor must be positive, got {factor!r}")
        return ConvexRegion(self.vertices * float(factor), self.tag)

    def __repr__(self) -> str:
        return f"ConvexRegion(tag={self.tag!r}, vertices={self.vertex_count})"


def _half_chain(pts: list[tuple[float, float]]) -> list[tuple[float, float]]:
    chain: list[tuple[float, float]] = []
    for x, y in pts:
        while len(chain) >= 2:
            ox, oy = chain[-2]
            ax, ay = chain[-1]
            if (ax - ox) * (y - oy) - (ay - oy) * (x - ox) <= 0.0:
                chain.pop()
            else:
                break
        chain.append((x, y))
    return chain


def _cross(a: tuple[float, float], b: tuple[float, float], c: tuple[float, float]) -> float:
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def _drop_cyclic_collinear(
    hull: list[tuple[float, float]], cross_tol: float
) -> list[tuple[float, float]]:
    # The seam between the two monotone chains can leave a near-collinear
    # triple; iterate until every cyclic triple makes a strict left turn.
    while len(hull) >= 3:
        n = len(hull)
        keep = [hull[i] for i in range(n) if _cross(hull[i - 1], hull[i], hull[(i + 1) % n]) > cross_tol]
        if len(keep) <= 2:
            lo, hi = min(hull), max(hull)
            return [lo] if lo == hi else [lo, hi]
        if len(keep) == n:
            return keep
        hull = keep
    return hull


def convex_hull(points) -> ConvexRegion:
    """Convex hull of a set of planar points.

    Duplicate and near-duplicate points (within ``1e-12`` relative) are
    merged first; interior points are discarded.  Collinear input
    degrades to a segment, a single repeated point to a point region.
    """
    arr = np.atleast_2d(np.asarray(points, dtype=float))
    if arr.size == 0:
        raise ValueError("convex_hull needs at least one point")
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise ValueError(f"expected an (M, 2) point array, got shape {arr.shape}")
    if not np.isfinite(arr).all():
        raise ValueError("points must be finite")

    scale = float(np.abs(arr).max())
    merge_tol = MERGE_REL * scale
    cross_tol = CROSS_REL * scale * scale

    order = np.lexsort((arr[:, 1], arr[:, 0]))
    pts: list[tuple[float, float]] = []
    for i in order:
        x = float(arr[i, 0])
        y = float(arr[i, 1])
        if pts and abs(x - pts[-1][0]) <= merge_tol and abs(y - pts[-1][1]) <= merge_tol:
            continue
        pts.append((x, y))

    if len(pts) == 1:
        return ConvexRegion(np.array(pts), POINT)

    # Chain with exact cross comparisons: toleranced popping inside the
    # chain can discard true corners when coordinates tie within ulps and
    # the sort starts mid-edge.  Near-collinear vertices are removed
    # afterwards, where each removal perturbs the hull by at most
    # cross / |edge|.
    lower = _half_chain(pts)
    upper = _half_chain(pts[::-1])
    hull = lower[:-1] + upper[:-1]
    if len(hull) >= 3:
        hull = _drop_cyclic_collinear(hull, cross_tol)

    if len(hull) == 1:
        return ConvexRegion(np.array(hull), POINT)
    if len(hull) == 2:
        return ConvexRegion(np.array(hull), SEGMENT)

    start = min(range(len(hull)), key=lambda i: hull[i])
    hull = hull[start:] + hull[:start]
    return ConvexRegion(np.array(hull), POLYGON)


def hull_of_complex(values) -> ConvexRegion:
    """Convex hull of complex numbers viewed as planar points."""
    z = np.asarray(values, dtype=complex).ravel()
    return convex_hull(np.column_stack([z.real, z.imag]))


def point_in_region(region: ConvexRegion, x: float, y: float) -> bool:
    """True when ``(x, y)`` lies inside or on the boundary (within tolerance)."""
    v = region.vertices
    scale = max(float(np.abs(v).max()), abs(x), abs(y))
    if region.tag == POINT:
        return math.hypot(x - v[0, 0], y - v[0, 1]) <= MERGE_REL * scale
    if region.tag == SEGMENT:
        d = _point_segment_distance(x, y, v[0, 0], v[0, 1], v[1, 0], v[1, 1])
        return d <= MERGE_REL * scale
    nxt = np.roll(v, -1, axis=0)
    cross = (nxt[:, 0] - v[:, 0]) * (y - v[:, 1]) - (nxt[:, 1] - v[:, 1]) * (x - v[:, 0])
    return bool((cross >= -CROSS_REL * scale * scale).all())


def origin_in_region(region: ConvexRegion) -> bool:
    """True when the complex origin lies inside or on the region boundary."""
    return point_in_region(region, 0.0, 0.0)


def _point_segment_distance(
    px: float, py: float, ax: float, ay: float, bx: float, by: float
) -> float:
    dx = bx - ax
    dy = by - ay
    norm2 = dx * dx + dy * dy
    if norm2 == 0.0:
        return math.hypot(px - ax, py - ay)
    t = ((px - ax) * dx + (py - ay) * dy) / norm2
    t = 0.0 if t < 0.0 else (1.0 if t > 1.0 else t)
    return math.hypot(px - (ax + t * dx), py - (ay + t * dy))


def min_distance_to_point(region: ConvexRegion, x: float, y: float) -> float:
    """Euclidean distance from a point to the region (0 when inside).

    For polygons the minimiser can be the interior of an edge, not a
    vertex, so every edge is checked with a point-to-segment projection.
    """
    v = region.vertices
    if region.tag == POINT:
        return math.hypot(x - v[0, 0], y - v[0, 1])
    if region.tag == SEGMENT:
        return _point_segment_distance(x, y, v[0, 0], v[0, 1], v[1, 0], v[1, 1])
    if point_in_region(region, x, y):
        return 0.0
    n = v.shape[0]
    best = math.inf
    for i in range(n):
        j = (i + 1) % n
        d = _point_segment_distance(x, y, v[i, 0], v[i, 1], v[j, 0], v[j, 1])
        if d < best:
            best = d
    return best


def max_distance_to_point(region: ConvexRegion, x: float, y: float) -> float:
    """Greatest distance from a point to the region.

    The Euclidean norm is convex, so the maximum over a convex region is
    attained at a vertex; scanning vertices is exact.
    """
    v = region.vertices
    return float(np.hypot(v[:, 0] - x, v[:, 1] - y).max())


def min_distance_to_origin(region: ConvexRegion) -> float:
    return min_distance_to_point(region, 0.0, 0.0)


def max_distance_to_origin(region: ConvexRegion) -> float:
    return max_distance_to_point(region, 0.0, 0.0)


def min_vertex_distance_to_origin(region: ConvexRegion) -> float:
    """Smallest vertex norm.

    Overestimates the true region-to-origin distance whenever the nearest
    boundary point falls on an edge interior; kept for compatibility with
    the vertex-only lower-bound rule.
    """
    v = region.vertices
    return float(np.hypot(v[:, 0], v[:, 1]).min())
