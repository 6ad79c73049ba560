"""
Quotient invariants of a fan
============================

A fan is a list of primitive lattice rays plus the index sets that span
its cones.  From that single object the library derives the homogeneous
quotient presentation of the associated toric variety and of its profinite
completion: the charge matrix of relations among rays, the quotient group,
the discriminant locus removed before taking the quotient, and the finite
symmetry that survives completion.
"""

from toriq import catalog
from toriq.quotient import (
    aut_presentation,
    charge_matrix,
    discriminant_locus,
    fan_symmetry,
    group_structure,
)

# The classics, ready made.  Each is also shipped as a JSON file usable
# from the command line (see toriq.catalog.fan_path).
fans = [
    catalog.projective_line(),
    catalog.projective_plane(),
    catalog.product_of_lines(),
    catalog.weighted_plane(2),
    catalog.hirzebruch(2),
]

for fan in fans:
    print(f"== {fan.name}: rank {fan.lattice_rank}, rays {list(fan.rays)}")

    # Columns of Q span the integer relations sum_i Q[i][j] v_i = 0.
    q = charge_matrix(fan)
    print("   charge matrix rows:", [list(q.matrix.row(i)) for i in range(q.n_rays)])

    # The quotient group: a torus of rank (#rays - lattice rank), plus
    # finite cyclic factors when the rays generate a proper sublattice.
    structure = group_structure(fan)
    print("   quotient group:", structure.describe())

    # Minimal ray sets spanning no cone; their coordinate subspaces make up
    # the locus removed before the quotient.
    disc = discriminant_locus(fan)
    print("   discriminant, minimal subsets (1-based):",
          [[i + 1 for i in t] for t in disc.minimal_subsets])

    # Ray permutations fixing every row of Q and the discriminant: the
    # finite part of the automorphism group of the completion.
    symmetry = fan_symmetry(fan)
    print(f"   fan symmetry: {symmetry.structure_name} of order {symmetry.order}")

    # Completion automorphisms: finite symmetry extended by a solenoidal torus.
    aut = aut_presentation(fan)
    print("   automorphisms:", aut.describe())
    print()

# The weighted plane shows why the charge matrix matters: the weights
# (1, 1, n) are read off directly as the kernel column.
for n in (2, 3, 5):
    q = charge_matrix(catalog.weighted_plane(n))
    print(f"weighted plane (1,1,{n}) charge column:", q.matrix.column(0))
