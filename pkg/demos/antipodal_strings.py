"""
Finding antipodal strings on a circle
=====================================

Sample the unit circle symmetrically, carve the samples into short arcs,
and search for arc pairs whose descriptors agree. With a descriptor built
from even functions of the coordinates, every arc matches its antipode.
"""

import numpy as np

from proxitop import (
    StringPath,
    but_search,
    feature_descriptor,
    feature_map_from_config,
    sphere_sample,
)

grid = sphere_sample(1, 32)  # 64 samples, sample k paired with k+32
arcs = [StringPath(grid.samples[i : i + 4]) for i in range(0, grid.size, 4)]
print(f"{len(arcs)} arcs of 4 samples each")

even = feature_map_from_config({"name": "even-coords", "dim": 2, "tolerance": 1e-9})
descriptor = feature_descriptor(even, "mean")

result = but_search(descriptor, strings=arcs, tol=1e-9)
for pair in result.pairs:
    print(f"arc {pair.a:2d} <-> arc {pair.b:2d}  distance {pair.distance:.2e}")

# an odd descriptor (raw coordinate mean) sees no matches: negation flips it
odd = feature_map_from_config({"name": "coords", "dim": 2})
print("odd descriptor pairs:", len(but_search(feature_descriptor(odd, "mean"),
                                              strings=arcs, tol=1e-9).pairs))
