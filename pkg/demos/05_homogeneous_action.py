"""
Homogeneous coordinates, torus action, power maps
=================================================

The completed variety is presented as homogeneous coordinates (one exact
polar value per ray, avoiding the discriminant locus) modulo the quotient
torus acting through the charge matrix.  The coordinatewise power maps
descend to the quotient because they intertwine the action with its
reparametrization; checking that identity exactly, at any level, is the
computational content of the bonding maps of the completion.
"""

import random
from fractions import Fraction as F

from toriq import catalog
from toriq.homogeneous import (
    HomogeneousPoint,
    TorusElement,
    act,
    check_equivariance,
    in_discriminant,
    power_map,
    same_orbit,
)
from toriq.quotient import charge_matrix
from toriq.solenoid import PolarComplex as P

cp1 = catalog.projective_line()
prod = catalog.product_of_lines()

# Discriminant membership is a pattern condition on zero coordinates.
print("(0,0,1,1) in the discriminant of the quadric?",
      in_discriminant(prod, (P.zero(), P.zero(), P.one(), P.one())))
print("(0,1,0,1) in the discriminant?",
      in_discriminant(prod, (P.zero(), P.one(), P.zero(), P.one())))

# On the line, the single charge column (1,1) scales both coordinates.
z = HomogeneousPoint(cp1, 1, (P.one(), P(F(1), F(1, 4))))
t = TorusElement(1, (P(F(1), F(1, 6)),))
print("\nz:", [str(c) for c in z.coords])
print("t.z:", [str(c) for c in act(t, z).coords])

# Squaring both coordinates commutes with acting, provided the torus
# parameter is squared as well.
left = power_map(2, act(t, z))
right = act(t.pow_int(2), power_map(2, z))
print("power(2) of t.z:   ", [str(c) for c in left.coords])
print("t^2 . power(2) of z:", [str(c) for c in right.coords])
print("equivariant:", check_equivariance(cp1, t, z, 2))

# A seeded sweep over all example fans.
rng = random.Random(2)
for fan in [cp1, prod, catalog.projective_plane(), catalog.weighted_plane(2)]:
    s = charge_matrix(fan).torus_rank
    trials = 0
    for _ in range(100):
        t = TorusElement(1, tuple(
            P(F(rng.randint(1, 9), rng.randint(1, 9)), F(rng.randint(0, 11), 12))
            for _ in range(s)
        ))
        coords = tuple(
            P.zero() if rng.random() < 0.2
            else P(F(rng.randint(1, 9)), F(rng.randint(0, 11), 12))
            for _ in range(fan.n_rays)
        )
        if in_discriminant(fan, coords):
            continue
        assert check_equivariance(fan, t, HomogeneousPoint(fan, 1, coords), rng.randint(1, 12))
        trials += 1
    print(f"{fan.name}: equivariance verified on {trials} random triples")

# Orbit decision: the charge matrix forces both line coordinates to scale
# together, so (1,1) and (2,3) are in different orbits while (2,2) is not.
base = HomogeneousPoint(cp1, 1, (P.one(), P.one()))
print("\n(1,1) ~ (2,2):", same_orbit(base, HomogeneousPoint(cp1, 1, (P(F(2)), P(F(2))))))
print("(1,1) ~ (2,3):", same_orbit(base, HomogeneousPoint(cp1, 1, (P(F(2)), P(F(3))))))

# On the weighted plane (1,1,2) the third coordinate scales quadratically.
fan = catalog.weighted_plane(2)
a = HomogeneousPoint(fan, 1, (P.one(), P.one(), P.one()))
print("(1,1,1) ~ (2,2,4):",
      same_orbit(a, HomogeneousPoint(fan, 1, (P(F(2)), P(F(2)), P(F(4))))))
print("(1,1,1) ~ (2,2,2):",
      same_orbit(a, HomogeneousPoint(fan, 1, (P(F(2)), P(F(2)), P(F(2))))))
