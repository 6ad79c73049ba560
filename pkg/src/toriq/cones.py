"""Rational polyhedral cones: duals, lattice membership, Hilbert bases.

All computations are exact.  A cone is the set of nonnegative rational
combinations of its integer generators; a non-pointed cone carries its
lineality space as explicit plus/minus generator pairs.

Duals are computed by enumerating active constraint sets (the extreme rays
of ``{m : <m, v> >= 0 for all v}`` are kernels of corank-one subsets of the
constraints), which needs nothing beyond exact integer kernels.  Hilbert
bases come from the lattice points of fundamental parallelepipeds of
independent generator subsets, closed by an irreducibility filter; the
non-pointed case splits off the lineality lattice first.  This is simple
to verify, deterministic, and fast enough at desk scale (rank <= 4, small
entries); no attempt is made at project-and-lift sophistication.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product

from .errors import DomainError
from .fans import Fan
from .intlinalg import (
    IntMatrix,
    IntVector,
    dot,
    integer_kernel,
    inverse_unimodular,
    primitive,
    smith_normal_form,
)


def _grlex_key(v: IntVector):
    return (sum(abs(x) for x in v), v)


@dataclass(frozen=True)
class RationalCone:
    """Cone of nonnegative combinations of the stored generators.

    Generators are stored primitive, deduplicated and graded-lex sorted;
    the empty generator tuple is the zero cone.
    """

    ambient_rank: int
    generators: tuple[IntVector, ...]

    def __post_init__(self):
        if self.ambient_rank < 1:
            raise DomainError("ambient rank must be positive")
        gens = []
        for v in self.generators:
            v = tuple(v)
            if len(v) != self.ambient_rank:
                raise DomainError(f"generator {v} has wrong length")
            gens.append(primitive(v))
        object.__setattr__(
            self, "generators", tuple(sorted(set(gens), key=_grlex_key))
        )

    @classmethod
    def from_generators(cls, ambient_rank, generators) -> "RationalCone":
        return cls(ambient_rank, tuple(tuple(v) for v in generators))

    @property
    def is_zero(self) -> bool:
        return not self.generators

    def generator_matrix(self) -> IntMatrix:
        """Generators as matrix rows."""
        return IntMatrix.from_rows(self.generators, self.ambient_rank)


@dataclass(frozen=True)
class HilbertBasis:
    """Minimal generating set of ``cone ∩ Z^n`` as an additive semigroup."""

    cone: RationalCone
    generators: tuple[IntVector, ...]

    @property
    def rank_r(self) -> int:
        return len(self.generators)


def _kernel_columns(rows: list[IntVector], rank: int) -> list[IntVector]:
    """Saturated integer kernel basis of the row system; handles no rows."""
    if not rows:
        return [tuple(int(i == j) for j in range(rank)) for i in range(rank)]
    k = integer_kernel(IntMatrix.from_rows(rows, rank))
    return [k.column(j) for j in range(k.cols)]


@lru_cache(maxsize=None)
def dual_cone(sigma: RationalCone) -> RationalCone:
    """Generators of ``{m : <m, v> >= 0 for every generator v of sigma}``.

    Extreme rays are listed once; when the dual is not pointed its
    lineality space enters as a basis together with its negation.  Ray
    representatives are reduced modulo the lineality lattice so the output
    is canonical.
    """
    n = sigma.ambient_rank
    gens = sigma.generators
    lineality = _kernel_columns(list(gens), n)
    ell = len(lineality)
    rho = n - ell
    out: set[IntVector] = set()
    for b in lineality:
        out.add(b)
        out.add(tuple(-x for x in b))
    if rho > 0:
        reduce_mod = _lineality_reducer(lineality, n)
        for subset in combinations(range(len(gens)), rho - 1):
            rows = [gens[i] for i in subset]
            if rows and IntMatrix.from_rows(rows, n).rank() != rho - 1:
                continue
            kernel = _kernel_columns(rows, n)
            if len(kernel) != ell + 1:
                continue
            u = _direction_outside(kernel, lineality, n)
            if u is None:
                continue
            if all(dot(g, u) >= 0 for g in gens):
                ray = u
            elif all(dot(g, u) <= 0 for g in gens):
                ray = tuple(-x for x in u)
            else:
                continue
            out.add(primitive(reduce_mod(ray)))
    return RationalCone(n, tuple(out))


def _direction_outside(kernel, lineality, rank):
    """A kernel basis vector independent of the lineality columns."""
    if not lineality:
        return kernel[0] if kernel else None
    lin = IntMatrix.from_rows(lineality, rank)
    base = lin.rank()
    for u in kernel:
        if IntMatrix.from_rows(lineality + [u], rank).rank() > base:
            return u
    return None


def _lineality_reducer(lineality, rank):
    """Map x to the canonical representative of x modulo the lineality lattice."""
    if not lineality:
        return lambda x: x
    basis = IntMatrix(tuple(zip(*lineality)), len(lineality))
    u, _, _ = smith_normal_form(basis)
    uinv = inverse_unimodular(u)
    ell = len(lineality)

    def reduce_mod(x):
        coords = u.mat_vec(x)
        return uinv.mat_vec((0,) * ell + tuple(coords[ell:]))

    return reduce_mod


def lineality_basis(cone: RationalCone) -> list[IntVector]:
    """Saturated lattice basis of ``cone ∩ -cone``."""
    dual = dual_cone(cone)
    return _kernel_columns(list(dual.generators), cone.ambient_rank)


def cone_contains(cone: RationalCone, point) -> bool:
    """Exact membership via the dual description."""
    p = tuple(point)
    if len(p) != cone.ambient_rank:
        raise DomainError("point has wrong length")
    return all(dot(d, p) >= 0 for d in dual_cone(cone).generators)


def _saturation_basis(vectors: list[IntVector], rank: int) -> list[IntVector]:
    """Basis of ``span(vectors) ∩ Z^rank`` (the saturated column lattice)."""
    orth = _kernel_columns(vectors, rank)
    return _kernel_columns(orth, rank)


def _parallelepiped_points(subset: list[IntVector], rank: int) -> list[IntVector]:
    """Lattice points of ``{sum t_i g_i : 0 <= t_i < 1}`` for independent g_i.

    Enumerated as coset representatives of the sublattice spanned by the
    generators inside the saturation of their span.
    """
    k = len(subset)
    basis = _saturation_basis(subset, rank)
    bmat = IntMatrix(tuple(zip(*basis)), k)
    coords = []
    for g in subset:
        h = _solve_fraction(bmat, g)
        assert all(x.denominator == 1 for x in h)  # saturation guarantees integrality
        coords.append(tuple(x.numerator for x in h))
    h = IntMatrix.from_rows(coords, k).transpose()  # columns = generators in basis coords
    u, d, _ = smith_normal_form(h)
    uinv = inverse_unimodular(u)
    hinv_cols = [_solve_fraction(h, tuple(int(i == j) for i in range(k))) for j in range(k)]
    points = []
    for residues in product(*(range(d.entries[i][i]) for i in range(k))):
        rep = uinv.mat_vec(residues)
        t = [sum(hinv_cols[j][i] * rep[j] for j in range(k)) for i in range(k)]
        frac = [x - (x.numerator // x.denominator) for x in t]
        y = [sum(coords[j][i] * frac[j] for j in range(k)) for i in range(k)]
        assert all(x.denominator == 1 for x in y)
        point = tuple(
            sum(basis[j][i] * int(y[j]) for j in range(k)) for i in range(rank)
        )
        points.append(point)
    return points


def _solve_fraction(a: IntMatrix, b) -> list[Fraction]:
    """Unique rational solution of ``a @ x = b`` for injective ``a``."""
    m, n = a.rows, a.cols
    work = [[Fraction(x) for x in row] + [Fraction(bi)] for row, bi in zip(a.entries, b)]
    pivots = []
    r = 0
    for c in range(n):
        pivot = next((i for i in range(r, m) if work[i][c] != 0), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        pv = work[r][c]
        work[r] = [x / pv for x in work[r]]
        for i in range(m):
            if i != r and work[i][c] != 0:
                f = work[i][c]
                work[i] = [x - f * y for x, y in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
    if r < n:
        raise DomainError("system is underdetermined")
    for i in range(r, m):
        if work[i][n] != 0:
            raise DomainError("system is inconsistent")
    x = [Fraction(0)] * n
    for i, c in enumerate(pivots):
        x[c] = work[i][n]
    return x


def _pointed_hilbert_basis(gens: tuple[IntVector, ...], rank: int,
                           dual_gens: tuple[IntVector, ...]) -> list[IntVector]:
    """Hilbert basis of a pointed cone given with its dual generators.

    Candidates: lattice points of fundamental parallelepipeds over all
    independent generator subsets, plus the generators.  Filtered in
    increasing order of a linear grading strictly positive on the cone.
    """
    weight = tuple(sum(d[i] for d in dual_gens) for i in range(rank))
    candidates: set[IntVector] = set(gens)
    for size in range(1, min(len(gens), rank) + 1):
        for subset in combinations(gens, size):
            if IntMatrix.from_rows(list(subset), rank).rank() != size:
                continue
            candidates.update(_parallelepiped_points(list(subset), rank))
    candidates.discard((0,) * rank)
    graded = sorted(candidates, key=lambda x: (dot(weight, x), _grlex_key(x)))
    accepted: list[IntVector] = []
    accepted_by_grade: list[tuple[int, IntVector]] = []
    for x in graded:
        wx = dot(weight, x)
        reducible = False
        for wy, y in accepted_by_grade:
            if wy >= wx:
                break
            z = tuple(a - b for a, b in zip(x, y))
            if all(dot(d, z) >= 0 for d in dual_gens):
                reducible = True
                break
        if not reducible:
            accepted.append(x)
            accepted_by_grade.append((wx, x))
    return accepted


@lru_cache(maxsize=None)
def hilbert_basis(cone: RationalCone) -> HilbertBasis:
    """Minimal generating set of the semigroup of lattice points of a cone.

    For a non-pointed cone the lineality lattice contributes a basis and
    its negation, and the pointed quotient is handled recursively; its
    basis elements are lifted along a fixed section, keeping the output
    deterministic.  Output is graded-lex sorted.
    """
    n = cone.ambient_rank
    dual = dual_cone(cone)
    lineality = _kernel_columns(list(dual.generators), n)
    if not lineality:
        gens = _pointed_hilbert_basis(cone.generators, n, dual.generators)
        return HilbertBasis(cone, tuple(sorted(gens, key=_grlex_key)))
    ell = len(lineality)
    out: list[IntVector] = []
    for b in lineality:
        out.append(b)
        out.append(tuple(-x for x in b))
    if ell < n:
        basis = IntMatrix(tuple(zip(*lineality)), ell)
        u, _, _ = smith_normal_form(basis)
        uinv = inverse_unimodular(u)
        proj_gens = []
        for g in cone.generators:
            img = u.mat_vec(g)[ell:]
            if any(img):
                proj_gens.append(img)
        if proj_gens:
            quotient = RationalCone.from_generators(n - ell, proj_gens)
            for h in hilbert_basis(quotient).generators:
                out.append(uinv.mat_vec((0,) * ell + tuple(h)))
    return HilbertBasis(cone, tuple(sorted(set(out), key=_grlex_key)))


def fan_cone(fan: Fan, indices) -> RationalCone:
    """The cone of a fan spanned by the referenced rays (empty = zero cone)."""
    idx = tuple(sorted(set(indices)))
    if not fan.is_cone(idx):
        raise DomainError(f"{[i + 1 for i in idx]} is not a cone of the fan")
    if not idx:
        # zero cone: no generators
        return RationalCone(fan.lattice_rank, ())
    return RationalCone.from_generators(fan.lattice_rank, [fan.rays[i] for i in idx])


def affine_fiber_rank(fan: Fan, indices) -> int:
    """Semigroup rank of the dual of a fan cone.

    This is the number of Hilbert basis elements of the dual semigroup,
    i.e. the exponent r such that the covering fiber over the associated
    affine chart is the r-th power of the profinite integers.
    """
    sigma = fan_cone(fan, indices)
    return hilbert_basis(dual_cone(sigma)).rank_r
