"""The three propagation methods, side by side, at one frequency.

Propagates a short interval signal and draws the exhaustive endpoint
cloud, the convex hull kept by the selective method, and the rigorous
bounding box.  The hull hugs the cloud exactly; the box hugs the hull.
Writes ``demo_reachable_set.svg``.
"""

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from intervaldft import (
    IntervalSignal,
    amplitude_bounds_box,
    amplitude_bounds_selective,
    bounding_box,
    brute_force,
    selective,
)

rng = np.random.default_rng(12)
mids = rng.uniform(-3.0, 3.0, 8)
signal = IntervalSignal.from_bounds(mids - 0.8, mids + 0.8)
k = 3

cloud = brute_force(signal, k)          # 2**8 endpoint combinations
trace = selective(signal, k)            # hull per added term
boxes = bounding_box(signal, k)         # rectangle per added term

print(f"signal length {len(signal)}, frequency k={k}")
print(f"endpoint cloud size: {cloud.final.size}")
print(f"hull vertices kept by the selective method: {trace.final.vertex_count}")
print(f"final box: {boxes.final}")

sel_bounds = amplitude_bounds_selective(trace.final)
box_bounds = amplitude_bounds_box(boxes.final)
print(f"\namplitude bounds (selective): [{sel_bounds.lo:.6f}, {sel_bounds.hi:.6f}]")
print(f"amplitude bounds (box):       [{box_bounds.lo:.6f}, {box_bounds.hi:.6f}]")
print("the selective interval is nested inside the box interval:",
      box_bounds.lo <= sel_bounds.lo and sel_bounds.hi <= box_bounds.hi)

fig, ax = plt.subplots(figsize=(6.5, 6.5))
pts = cloud.final
ax.plot(pts.real, pts.imag, ".", markersize=2, color="0.6", label="endpoint cloud")

hull = np.vstack([trace.final.vertices, trace.final.vertices[:1]])
ax.plot(hull[:, 0], hull[:, 1], "r-", linewidth=1.5, label="selective hull")

box = boxes.final
corners = np.array([(z.real, z.imag) for z in box.corners() + box.corners()[:1]])
ax.plot(corners[:, 0], corners[:, 1], "b--", linewidth=1.2, label="bounding box")

ax.plot(0, 0, "k+", markersize=12, label="origin")
ax.set_xlabel("real part")
ax.set_ylabel("imaginary part")
ax.set_title(f"reachable set of the Fourier coefficient at k={k}")
ax.set_aspect("equal")
ax.legend()
fig.tight_layout()
fig.savefig("demo_reachable_set.svg")
print("\nwrote demo_reachable_set.svg")
