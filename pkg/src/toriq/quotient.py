"""Homogeneous quotient data of a fan: charge matrix, quotient group,
discriminant locus, fan symmetry, and the automorphism presentation of the
profinite completion.

The charge matrix Q is the canonical integer kernel basis of the transpose
ray matrix, so its columns span the relations sum_i Q[i][j] * v_i = 0 among
the primitive ray generators.  The quotient group G (kernel of the
evaluation map from the big torus to the lattice torus) is read off the
Smith form of the ray matrix: free rank ``n_rays - lattice_rank`` plus one
finite cyclic factor per invariant factor exceeding 1.

The fan symmetry is computed as the ray permutations fixing every row of Q
and preserving the discriminant antichain.  Row equality reproduces the
known symmetry groups of the classical examples; the discriminant filter is
a no-op on those but guards degenerate inputs.  Whether such permutations
always preserve the cone structure is checked per input and reported as a
flag rather than assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from math import factorial

from .errors import DomainError, IncompleteFanError, TorusFactorError
from .fans import Fan
from .intlinalg import IntMatrix, integer_kernel, smith_normal_form

Permutation = tuple[int, ...]  # one-line form: i -> perm[i]

_ENUMERATION_CAP = 500_000


@dataclass(frozen=True)
class ChargeMatrix:
    """n_rays x s integer matrix with Hermite-canonical columns."""

    matrix: IntMatrix

    @property
    def n_rays(self) -> int:
        return self.matrix.rows

    @property
    def torus_rank(self) -> int:
        return self.matrix.cols

    def row(self, i: int):
        return self.matrix.row(i)


@dataclass(frozen=True)
class QuotientGroupStructure:
    torus_rank: int
    torsion_factors: tuple[int, ...]

    @property
    def has_torsion(self) -> bool:
        return bool(self.torsion_factors)

    def describe(self) -> str:
        parts = []
        if self.torus_rank:
            parts.append(f"(C*)^{self.torus_rank}")
        parts.extend(f"Z/{d}" for d in self.torsion_factors)
        return " x ".join(parts) if parts else "1"


@dataclass(frozen=True)
class DiscriminantAntichain:
    """Minimal ray-index sets generating no cone (0-based, sorted)."""

    minimal_subsets: tuple[tuple[int, ...], ...]

    def covers(self, zero_set) -> bool:
        s = frozenset(zero_set)
        return any(set(t) <= s for t in self.minimal_subsets)


@dataclass(frozen=True)
class FanSymmetryGroup:
    row_classes: tuple[tuple[int, ...], ...]
    generators: tuple[Permutation, ...]
    order: int
    structure_name: str
    preserves_maximal_cones: bool
    torsion_warning: bool


@dataclass(frozen=True)
class AutPresentation:
    """Automorphism data of the completed variety: finite fan symmetry
    extended by the solenoidal torus of rank ``n_rays - torus_rank``."""

    finite_part: FanSymmetryGroup
    solenoidal_torus_rank: int
    torsion_factors: tuple[int, ...]

    def describe(self) -> str:
        return f"{self.finite_part.structure_name} x| (C*_Q)^{self.solenoidal_torus_rank}"


def _ray_matrix_checked(fan: Fan) -> IntMatrix:
    mat = fan.ray_matrix()
    if mat.rank() != fan.lattice_rank:
        raise TorusFactorError(
            "fan has a torus factor (rays do not span the lattice); "
            "the homogeneous quotient presentation does not apply"
        )
    return mat


@lru_cache(maxsize=None)
def charge_matrix(fan: Fan) -> ChargeMatrix:
    """Canonical relation matrix among the primitive ray generators."""
    mat = _ray_matrix_checked(fan)
    kernel = integer_kernel(mat.transpose())
    return ChargeMatrix(kernel)


@lru_cache(maxsize=None)
def group_structure(fan: Fan) -> QuotientGroupStructure:
    """Free rank and invariant factors of the quotient group."""
    mat = _ray_matrix_checked(fan)
    _, d, _ = smith_normal_form(mat)
    k = min(d.rows, d.cols)
    torsion = tuple(d.entries[i][i] for i in range(k) if d.entries[i][i] > 1)
    return QuotientGroupStructure(fan.n_rays - fan.lattice_rank, torsion)


@lru_cache(maxsize=None)
def discriminant_locus(fan: Fan) -> DiscriminantAntichain:
    """Minimal ray subsets generating no cone, by ascending-cardinality scan."""
    n = fan.n_rays
    minimal: list[tuple[int, ...]] = []
    from itertools import combinations

    for size in range(1, n + 1):
        for subset in combinations(range(n), size):
            if any(set(t) <= set(subset) for t in minimal):
                continue
            if not fan.is_cone(subset):
                minimal.append(subset)
    return DiscriminantAntichain(tuple(sorted(minimal, key=lambda t: (len(t), t))))


def _row_classes(q: IntMatrix) -> tuple[tuple[int, ...], ...]:
    groups: dict[tuple[int, ...], list[int]] = {}
    for i in range(q.rows):
        groups.setdefault(q.row(i), []).append(i)
    return tuple(sorted((tuple(v) for v in groups.values()), key=lambda c: c[0]))


def _adjacent_transpositions(classes, n) -> list[Permutation]:
    gens = []
    for cls in classes:
        for a, b in zip(cls, cls[1:]):
            perm = list(range(n))
            perm[a], perm[b] = perm[b], perm[a]
            gens.append(tuple(perm))
    return gens


def _closure(generators, n) -> set[Permutation]:
    identity = tuple(range(n))
    group = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for g in frontier:
            for h in generators:
                gh = tuple(g[h[i]] for i in range(n))
                if gh not in group:
                    group.add(gh)
                    nxt.append(gh)
        frontier = nxt
    return group


def _minimal_generators(group: set[Permutation], n) -> list[Permutation]:
    identity = tuple(range(n))
    gens: list[Permutation] = []
    span = {identity}
    for g in sorted(group):
        if g in span:
            continue
        gens.append(g)
        span = _closure(gens, n)
        if len(span) == len(group):
            break
    return gens


def _structure_name(group_order: int, orbit_sizes: list[int], is_full_product: bool) -> str:
    if group_order == 1:
        return "1"
    if not is_full_product:
        return f"group of order {group_order}"
    names = []
    for size in sorted((s for s in orbit_sizes if s > 1), reverse=True):
        names.append("Z_2" if size == 2 else f"S_{size}")
    return " x ".join(names)


def _maps_antichain_to_itself(perm: Permutation, antichain) -> bool:
    mapped = {tuple(sorted(perm[i] for i in t)) for t in antichain}
    return mapped == set(antichain)


def _preserves_cones(perm: Permutation, fan: Fan) -> bool:
    mapped = {tuple(sorted(perm[i] for i in c)) for c in fan.maximal_cones}
    return mapped == set(fan.maximal_cones)


@lru_cache(maxsize=None)
def fan_symmetry(fan: Fan) -> FanSymmetryGroup:
    """Ray permutations fixing the charge matrix row-wise and preserving
    the discriminant antichain.

    When every antichain member is a union of row classes the filter is
    vacuous and the group is the full product of symmetric groups on the
    classes; otherwise the subgroup is enumerated (desk-scale inputs only).
    """
    n = fan.n_rays
    q = charge_matrix(fan).matrix
    torsion = group_structure(fan).has_torsion
    classes = _row_classes(q)
    antichain = discriminant_locus(fan).minimal_subsets

    class_of = {}
    for cls in classes:
        for i in cls:
            class_of[i] = cls
    filter_vacuous = all(
        set(t) == set().union(*(class_of[i] for i in t)) for t in antichain
    ) if antichain else True

    if filter_vacuous:
        order = 1
        for cls in classes:
            order *= factorial(len(cls))
        generators = tuple(_adjacent_transpositions(classes, n))
        orbit_sizes = [len(c) for c in classes]
        name = _structure_name(order, orbit_sizes, True)
    else:
        total = 1
        for cls in classes:
            total *= factorial(len(cls))
        if total > _ENUMERATION_CAP:
            raise DomainError(
                f"fan symmetry enumeration too large ({total} candidate permutations)"
            )
        members = []
        pools = [list(permutations(cls)) for cls in classes]

        def assemble(choice):
            perm = [0] * n
            for cls, images in zip(classes, choice):
                for src, dst in zip(cls, images):
                    perm[src] = dst
            return tuple(perm)

        from itertools import product as iproduct

        for choice in iproduct(*pools):
            perm = assemble(choice)
            if _maps_antichain_to_itself(perm, antichain):
                members.append(perm)
        group = set(members)
        order = len(group)
        generators = tuple(_minimal_generators(group, n))
        orbits = _orbits(group, n)
        orbit_sizes = [len(o) for o in orbits]
        full = order == _product_of_factorials(orbit_sizes)
        name = _structure_name(order, orbit_sizes, full)

    preserves = all(_preserves_cones(g, fan) for g in generators)
    return FanSymmetryGroup(
        row_classes=classes,
        generators=generators,
        order=order,
        structure_name=name,
        preserves_maximal_cones=preserves,
        torsion_warning=torsion,
    )


def _orbits(group, n) -> list[tuple[int, ...]]:
    seen = set()
    orbits = []
    for i in range(n):
        if i in seen:
            continue
        orbit = {perm[i] for perm in group} | {i}
        orbits.append(tuple(sorted(orbit)))
        seen |= orbit
    return orbits


def _product_of_factorials(sizes) -> int:
    out = 1
    for s in sizes:
        out *= factorial(s)
    return out


@lru_cache(maxsize=None)
def aut_presentation(fan: Fan) -> AutPresentation:
    """Finite fan symmetry extended by the residual solenoidal torus.

    Needs a complete fan: only then do the cusps and invariant divisors pin
    the automorphisms down to this form.
    """
    if not fan.complete:
        raise IncompleteFanError(
            "automorphism presentation requires a complete fan"
        )
    symmetry = fan_symmetry(fan)
    structure = group_structure(fan)
    return AutPresentation(
        finite_part=symmetry,
        solenoidal_torus_rank=fan.n_rays - structure.torus_rank,
        torsion_factors=structure.torsion_factors,
    )


def _one_based(seq) -> list[int]:
    return [i + 1 for i in seq]


def symmetry_report(fan: Fan) -> dict:
    sym = fan_symmetry(fan)
    return {
        "order": sym.order,
        "classes": [_one_based(c) for c in sym.row_classes],
        "generators": [_one_based(g) for g in sym.generators],
        "structure": sym.structure_name,
        "preserves_maximal_cones": sym.preserves_maximal_cones,
        "torsion_warning": sym.torsion_warning,
    }


def quotient_report(fan: Fan) -> dict:
    """JSON-ready quotient data; ray indices 1-based, keys fixed."""
    q = charge_matrix(fan)
    structure = group_structure(fan)
    disc = discriminant_locus(fan)
    report = {
        "charge_matrix": [list(q.matrix.row(i)) for i in range(q.n_rays)],
        "torus_rank": structure.torus_rank,
        "torsion": list(structure.torsion_factors),
        "discriminant": [_one_based(t) for t in disc.minimal_subsets],
        "symmetry": symmetry_report(fan),
    }
    if fan.complete:
        aut = aut_presentation(fan)
        report["aut"] = {
            "finite_part": aut.finite_part.structure_name,
            "torus_rank": aut.solenoidal_torus_rank,
        }
    else:
        report["aut"] = None
    return report
