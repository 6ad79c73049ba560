"""Exact finite-level arithmetic for profinite integers, the universal
one-dimensional solenoid, and the solenoidal complex plane.

A point of an inverse limit along the divisibility net is truncated to a
single level M: the residue mod M determines the residue mod every divisor,
and the level-M complex coordinate determines every lower coordinate by
powering.  Angles are stored in turns (fractions of a full rotation), so
the usual 2*pi factors become integer shifts and everything stays rational.
Moduli under root extraction are kept exact by accepting only perfect
powers; anything else raises rather than rounding.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import DomainError, LevelMismatchError


def _as_fraction(x) -> Fraction:
    if isinstance(x, float):
        raise DomainError("floating point input rejected; pass Fraction or int")
    return Fraction(x)


def _check_level(m) -> int:
    if isinstance(m, bool) or not isinstance(m, int) or m < 1:
        raise DomainError(f"level must be a positive integer, got {m!r}")
    return m


@dataclass(frozen=True)
class ProfiniteInt:
    """Residue at a finite truncation level of the profinite integers."""

    level: int
    residue: int

    def __post_init__(self):
        _check_level(self.level)
        if isinstance(self.residue, bool) or not isinstance(self.residue, int):
            raise DomainError("residue must be an integer")
        object.__setattr__(self, "residue", self.residue % self.level)

    @classmethod
    def from_int(cls, n: int, level: int) -> "ProfiniteInt":
        """Canonical inclusion of an integer at the given level."""
        return cls(level, n % _check_level(level))

    def project(self, d: int) -> int:
        """Residue mod a divisor d of the level."""
        _check_level(d)
        if self.level % d != 0:
            raise DomainError(f"{d} does not divide the level {self.level}")
        return self.residue % d

    def __add__(self, other: "ProfiniteInt") -> "ProfiniteInt":
        if not isinstance(other, ProfiniteInt):
            return NotImplemented
        if self.level != other.level:
            raise LevelMismatchError(
                f"cannot add residues at levels {self.level} and {other.level}; "
                "lift both to a common level first"
            )
        return ProfiniteInt(self.level, self.residue + other.residue)

    def __neg__(self) -> "ProfiniteInt":
        return ProfiniteInt(self.level, -self.residue)

    def __sub__(self, other: "ProfiniteInt") -> "ProfiniteInt":
        return self + (-other)

    def __str__(self) -> str:
        return f"{self.residue} mod {self.level}"


def pf_add(x: ProfiniteInt, y: ProfiniteInt) -> ProfiniteInt:
    """Addition at a common level; differing levels are an explicit error."""
    return x + y


def pf_project(x: ProfiniteInt, d: int) -> int:
    return x.project(d)


@dataclass(frozen=True)
class PolarComplex:
    """Exact polar form rho * e^(2*pi*i*turns): rational modulus and turns.

    turns is normalized into [0, 1) and forced to 0 when the modulus is 0,
    so equality of values is equality of fields.
    """

    rho: Fraction
    turns: Fraction = Fraction(0)

    def __post_init__(self):
        rho = _as_fraction(self.rho)
        turns = _as_fraction(self.turns)
        if rho < 0:
            raise DomainError("modulus must be nonnegative")
        turns = turns - (turns.numerator // turns.denominator)
        if rho == 0:
            turns = Fraction(0)
        object.__setattr__(self, "rho", rho)
        object.__setattr__(self, "turns", turns)

    @classmethod
    def one(cls) -> "PolarComplex":
        return cls(Fraction(1), Fraction(0))

    @classmethod
    def zero(cls) -> "PolarComplex":
        return cls(Fraction(0), Fraction(0))

    @property
    def is_zero(self) -> bool:
        return self.rho == 0

    def __mul__(self, other: "PolarComplex") -> "PolarComplex":
        if not isinstance(other, PolarComplex):
            return NotImplemented
        return PolarComplex(self.rho * other.rho, self.turns + other.turns)

    def pow_int(self, k: int) -> "PolarComplex":
        if isinstance(k, bool) or not isinstance(k, int):
            raise DomainError("exponent must be an integer")
        if self.rho == 0:
            if k < 1:
                raise DomainError("0 cannot be raised to a nonpositive power")
            return PolarComplex.zero()
        return PolarComplex(self.rho ** k, self.turns * k)

    def root(self, q: int, branch: int) -> "PolarComplex":
        """The branch-th of the q-th roots; modulus must be a perfect power."""
        _check_level(q)
        if not 0 <= branch < q:
            raise DomainError(f"branch must lie in [0, {q}), got {branch}")
        if self.rho == 0:
            return PolarComplex.zero()
        rho = Fraction(_exact_root(self.rho.numerator, q), _exact_root(self.rho.denominator, q))
        return PolarComplex(rho, (self.turns + branch) / q)

    def __str__(self) -> str:
        return f"rho={self.rho} turns={self.turns}"


def _exact_root(n: int, q: int) -> int:
    """Integer q-th root of n, or an error when n is not a perfect power."""
    if n < 0:
        raise DomainError("negative radicand")
    if n in (0, 1):
        return n
    lo, hi = 1, 1
    while hi ** q < n:
        hi *= 2
    while lo < hi:
        mid = (lo + hi) // 2
        if mid ** q < n:
            lo = mid + 1
        else:
            hi = mid
    if lo ** q != n:
        raise DomainError(
            f"{n} is not a perfect {q}-th power; refine only along exact radicals"
        )
    return lo


def cover_map(n: int, m: int, z: PolarComplex) -> PolarComplex:
    """Bonding map of the divisibility net: send a level-m coordinate to the
    level-n one by raising to the power m/n (requires n | m)."""
    _check_level(n)
    _check_level(m)
    if m % n != 0:
        raise DomainError(f"cover map needs n | m, got n={n}, m={m}")
    return z.pow_int(m // n)


@dataclass(frozen=True)
class SolenoidPoint:
    """Point of a solenoidal object truncated at level M.

    Only the level-M coordinate is stored; the coordinate at a divisor d is
    top**(M/d), so the compatibility relations hold by construction.
    """

    level: int
    top: PolarComplex

    def __post_init__(self):
        _check_level(self.level)

    def coordinate(self, d: int) -> PolarComplex:
        _check_level(d)
        if self.level % d != 0:
            raise DomainError(f"{d} does not divide the level {self.level}")
        return self.top.pow_int(self.level // d)

    def base_coordinate(self) -> PolarComplex:
        """The level-1 coordinate (image in the base circle or plane)."""
        return self.coordinate(1)

    def __mul__(self, other: "SolenoidPoint") -> "SolenoidPoint":
        if not isinstance(other, SolenoidPoint):
            return NotImplemented
        if self.level != other.level:
            raise LevelMismatchError(
                f"cannot multiply points at levels {self.level} and {other.level}"
            )
        return SolenoidPoint(self.level, self.top * other.top)

    def __str__(self) -> str:
        return f"level={self.level} {self.top}"


def phi(a: ProfiniteInt) -> SolenoidPoint:
    """Inclusion of the profinite integers into the solenoid fiber.

    The image has trivial base coordinate: its level-M turn is a/M, which
    powers to a whole number of turns at level 1.
    """
    return SolenoidPoint(a.level, PolarComplex(Fraction(1), Fraction(a.residue, a.level)))


def nu(theta_turns, level: int = 1) -> SolenoidPoint:
    """Base-leaf parametrization: theta turns of the base circle, realized
    at the working level by dividing the angle."""
    t = _as_fraction(theta_turns)
    _check_level(level)
    return SolenoidPoint(level, PolarComplex(Fraction(1), t / level))


def sol_exp(a: ProfiniteInt, theta_turns) -> SolenoidPoint:
    """Group exponential: the product phi(a) * nu(theta) at a's level."""
    return phi(a) * nu(theta_turns, a.level)


def refine(z: SolenoidPoint, new_level: int, branch: int) -> SolenoidPoint:
    """Lift a point to a deeper level by choosing a root branch.

    The result projects back to z under the cover map, for every branch.
    """
    _check_level(new_level)
    if new_level % z.level != 0:
        raise DomainError(
            f"refinement level {new_level} must be a multiple of {z.level}"
        )
    q = new_level // z.level
    return SolenoidPoint(new_level, z.top.root(q, branch))


def common_level(*levels: int) -> int:
    """Least common multiple of truncation levels."""
    out = 1
    for lv in levels:
        _check_level(lv)
        out = out * lv // gcd(out, lv)
    return out
