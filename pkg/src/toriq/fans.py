"""Fans: primitive rays plus simplicial cones given as ray-index sets.

A cone is identified with the sorted tuple of indices of its extreme rays;
its faces are exactly the subsets.  Non-simplicial maximal cones are
rejected at build time: the discriminant / charge-matrix machinery built on
top is stated ray-wise and needs every cone determined by its rays.

Completeness is a declared flag.  When set, necessary conditions are
enforced (rays span, maximal cones full-dimensional, each facet shared by
exactly two maximal cones); a full covering check of the ambient space is
deliberately out of scope.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path

from .errors import DomainError, FanValidationError
from .intlinalg import IntMatrix, IntVector, primitive

ConeRef = tuple[int, ...]


@dataclass(frozen=True)
class Fan:
    lattice_rank: int
    rays: tuple[IntVector, ...]
    maximal_cones: tuple[ConeRef, ...]
    complete: bool = False
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "rays", tuple(tuple(v) for v in self.rays))
        object.__setattr__(
            self, "maximal_cones", tuple(tuple(c) for c in self.maximal_cones)
        )
        if isinstance(self.lattice_rank, bool) or not isinstance(self.lattice_rank, int):
            raise FanValidationError("lattice_rank must be a positive integer")
        if self.lattice_rank < 1:
            raise FanValidationError("lattice_rank must be a positive integer")
        if not self.rays:
            raise FanValidationError("rays: at least one ray is required")
        for k, v in enumerate(self.rays):
            if len(v) != self.lattice_rank:
                raise FanValidationError(
                    f"rays[{k + 1}]: expected {self.lattice_rank} coordinates, got {len(v)}"
                )
            try:
                prim = primitive(v)
            except DomainError as exc:
                raise FanValidationError(f"rays[{k + 1}]: {exc}") from None
            if prim != v:
                raise FanValidationError(f"rays[{k + 1}]: ray {v} is not primitive")
        if len(set(self.rays)) != len(self.rays):
            raise FanValidationError("rays: duplicate ray")
        if not self.maximal_cones:
            raise FanValidationError("maximal_cones: at least one cone is required")
        seen: set[ConeRef] = set()
        for k, cone in enumerate(self.maximal_cones):
            if not cone:
                raise FanValidationError(f"maximal_cones[{k + 1}]: empty cone")
            if tuple(sorted(set(cone))) != tuple(cone):
                raise FanValidationError(
                    f"maximal_cones[{k + 1}]: indices must be sorted and distinct"
                )
            for i in cone:
                if not (0 <= i < len(self.rays)):
                    raise FanValidationError(
                        f"maximal_cones[{k + 1}]: ray index {i + 1} out of range"
                    )
            if cone in seen:
                raise FanValidationError(f"maximal_cones[{k + 1}]: duplicate cone")
            seen.add(cone)
            mat = IntMatrix.from_rows([self.rays[i] for i in cone], self.lattice_rank)
            if mat.rank() != len(cone):
                raise FanValidationError(
                    f"maximal_cones[{k + 1}]: generators are linearly dependent "
                    "(only simplicial cones are supported)"
                )
        for a in self.maximal_cones:
            for b in self.maximal_cones:
                if a != b and set(a) <= set(b):
                    raise FanValidationError(
                        f"maximal_cones: cone {_one_based(a)} is contained in {_one_based(b)}"
                    )
        used = {i for cone in self.maximal_cones for i in cone}
        for i in range(len(self.rays)):
            if i not in used:
                raise FanValidationError(f"rays[{i + 1}]: ray is not used by any cone")
        if self.complete:
            self._check_completeness_necessary()

    def _check_completeness_necessary(self):
        n = self.lattice_rank
        ray_matrix = IntMatrix.from_rows(self.rays, n)
        if ray_matrix.rank() != n:
            raise FanValidationError(
                "complete: rays of a complete fan must span the lattice"
            )
        for k, cone in enumerate(self.maximal_cones):
            if len(cone) != n:
                raise FanValidationError(
                    f"complete: maximal_cones[{k + 1}] is not full-dimensional"
                )
        facet_count: dict[ConeRef, int] = {}
        for cone in self.maximal_cones:
            for drop in cone:
                facet = tuple(i for i in cone if i != drop)
                facet_count[facet] = facet_count.get(facet, 0) + 1
        for facet, count in facet_count.items():
            if count != 2:
                raise FanValidationError(
                    f"complete: facet {_one_based(facet)} lies in {count} maximal cones, "
                    "expected exactly 2"
                )

    @property
    def n_rays(self) -> int:
        return len(self.rays)

    def ray_matrix(self) -> IntMatrix:
        """Rows are the primitive ray generators."""
        return IntMatrix.from_rows(self.rays, self.lattice_rank)

    def is_cone(self, indices) -> bool:
        """Is this ray-index set a cone of the fan (a face of a maximal cone)?"""
        s = frozenset(indices)
        for i in s:
            if not (0 <= i < self.n_rays):
                raise FanValidationError(f"ray index {i + 1} out of range")
        return any(s <= set(c) for c in self.maximal_cones)

    def cones(self) -> tuple[ConeRef, ...]:
        """All cones of the fan: the subset closure of the maximal cones."""
        return _fan_cones(self)

    def cone_dim(self, indices) -> int:
        # simplicial: generators of every cone are independent
        return len(tuple(indices))

    def cone_poset(self) -> "ConePoset":
        return ConePoset(self.cones())


@dataclass(frozen=True)
class ConePoset:
    """Cones of a fan ordered by inclusion of ray-index sets."""

    cones: tuple[ConeRef, ...]

    def dim(self, cone: ConeRef) -> int:
        return len(cone)

    def leq(self, a: ConeRef, b: ConeRef) -> bool:
        return set(a) <= set(b)

    @property
    def minimum(self) -> ConeRef:
        return ()

    def by_dimension(self) -> dict[int, tuple[ConeRef, ...]]:
        out: dict[int, list[ConeRef]] = {}
        for c in self.cones:
            out.setdefault(len(c), []).append(c)
        return {d: tuple(v) for d, v in sorted(out.items())}


@lru_cache(maxsize=None)
def _fan_cones(fan: Fan) -> tuple[ConeRef, ...]:
    found: set[ConeRef] = set()
    for cone in fan.maximal_cones:
        k = len(cone)
        for mask in range(1 << k):
            found.add(tuple(cone[i] for i in range(k) if mask >> i & 1))
    return tuple(sorted(found, key=lambda c: (len(c), c)))


def build_fan(lattice_rank, rays, maximal_cones, complete=False, name=None) -> Fan:
    """Validate and normalize fan data (cones sorted, duplicates rejected)."""
    rays = tuple(tuple(v) for v in rays)
    cones = tuple(sorted(tuple(sorted(set(c))) for c in maximal_cones))
    return Fan(lattice_rank, rays, cones, bool(complete), name)


def _one_based(cone) -> list[int]:
    return [i + 1 for i in cone]


def fan_to_dict(fan: Fan) -> dict:
    """JSON-ready description; ray indices are 1-based in files."""
    out = {
        "lattice_rank": fan.lattice_rank,
        "rays": [list(v) for v in fan.rays],
        "maximal_cones": [_one_based(c) for c in fan.maximal_cones],
        "complete": fan.complete,
    }
    if fan.name is not None:
        out["name"] = fan.name
    return out


def fan_from_dict(data) -> Fan:
    if not isinstance(data, dict):
        raise FanValidationError("fan file must contain a JSON object")
    for key in ("lattice_rank", "rays", "maximal_cones"):
        if key not in data:
            raise FanValidationError(f"{key}: missing field")
    rank = data["lattice_rank"]
    if isinstance(rank, bool) or not isinstance(rank, int):
        raise FanValidationError("lattice_rank: expected an integer")
    rays = data["rays"]
    if not isinstance(rays, list) or not all(isinstance(v, list) for v in rays):
        raise FanValidationError("rays: expected a list of integer vectors")
    for k, v in enumerate(rays):
        for x in v:
            if isinstance(x, bool) or not isinstance(x, int):
                raise FanValidationError(f"rays[{k + 1}]: entries must be integers")
    cones_raw = data["maximal_cones"]
    if not isinstance(cones_raw, list) or not all(isinstance(c, list) for c in cones_raw):
        raise FanValidationError("maximal_cones: expected a list of index lists")
    cones = []
    for k, c in enumerate(cones_raw):
        for i in c:
            if isinstance(i, bool) or not isinstance(i, int):
                raise FanValidationError(f"maximal_cones[{k + 1}]: indices must be integers")
            if i < 1:
                raise FanValidationError(
                    f"maximal_cones[{k + 1}]: ray indices are 1-based, got {i}"
                )
        cones.append([i - 1 for i in c])
    complete = data.get("complete", False)
    if not isinstance(complete, bool):
        raise FanValidationError("complete: expected true or false")
    name = data.get("name")
    if name is not None and not isinstance(name, str):
        raise FanValidationError("name: expected a string")
    return build_fan(rank, rays, cones, complete, name)


def load_fan(path) -> Fan:
    """Read a fan from a JSON file; see ``fan_to_dict`` for the format."""
    text = Path(path).read_text()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FanValidationError(f"invalid JSON: {exc}") from None
    return fan_from_dict(data)
