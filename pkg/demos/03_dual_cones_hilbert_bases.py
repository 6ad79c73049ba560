"""
Dual cones and Hilbert bases
============================

The affine patch attached to a fan cone is governed by the semigroup of
lattice points of the dual cone.  Its unique minimal generating set, the
Hilbert basis, has a size r with a concrete meaning for the completion:
the covering fiber over the patch is the r-th power of the profinite
integers.  Everything below is exact integer arithmetic.
"""

from toriq import catalog
from toriq.cones import (
    RationalCone,
    affine_fiber_rank,
    cone_contains,
    dual_cone,
    hilbert_basis,
)

# Duality in the plane: the first orthant is self dual, a single ray
# dualizes to a halfplane (note the lineality pair in the generators).
orthant = RationalCone.from_generators(2, [(1, 0), (0, 1)])
print("dual of first orthant:", dual_cone(orthant).generators)

ray = RationalCone.from_generators(2, [(1, 0)])
print("dual of a single ray:", dual_cone(ray).generators)

wedge = RationalCone.from_generators(2, [(0, 1), (2, -1)])
print("dual of cone((0,1),(2,-1)):", dual_cone(wedge).generators)

# Hilbert bases.  The free case is just the unit vectors; the dual of the
# wedge above needs the middle vector (1,1) as well.
print("\nHilbert basis of the orthant:", hilbert_basis(orthant).generators)
dual = dual_cone(wedge)
basis = hilbert_basis(dual)
print("Hilbert basis of its dual:", basis.generators, "-> r =", basis.rank_r)

# Exact membership tests run through the dual description.
print("(3,1) in the wedge dual?", cone_contains(dual, (3, 1)))
print("(1,-1) in the wedge dual?", cone_contains(dual, (1, -1)))

# The singular chart of the weighted plane (1,1,n): the dual semigroup
# needs n + 1 generators, one per lattice point on the bounding segment.
for n in (2, 3, 5):
    chart = RationalCone.from_generators(2, [(0, 1), (n, 1)])
    print(f"weight-{n} chart Hilbert basis:", hilbert_basis(chart).generators)

# Fiber ranks across a whole fan: 2n over the torus (the zero cone),
# smaller over deeper strata, and the smooth charts give exactly n.
fan = catalog.weighted_plane(3)
print(f"\naffine fiber ranks on {fan.name}:")
for cone in fan.cones():
    label = [i + 1 for i in cone] or "torus"
    print(f"   cone {label}: fiber = profinite integers ^ {affine_fiber_rank(fan, cone)}")
