"""Profinite integers, polar arithmetic, solenoid points and their maps."""

from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from toriq.errors import DomainError, LevelMismatchError
from toriq.solenoid import (
    PolarComplex,
    ProfiniteInt,
    SolenoidPoint,
    common_level,
    cover_map,
    nu,
    pf_add,
    pf_project,
    phi,
    refine,
    sol_exp,
)

rationals = st.fractions(
    min_value=-8, max_value=8, max_denominator=24
)
positive_rationals = st.fractions(min_value=F(1, 24), max_value=8, max_denominator=24)


def test_pf_add_examples():
    assert pf_add(ProfiniteInt(6, 4), ProfiniteInt(6, 5)) == ProfiniteInt(6, 3)
    x = ProfiniteInt(12, 7)
    assert pf_add(x, ProfiniteInt(12, 0)) == x
    assert pf_add(x, x) == ProfiniteInt(12, 2)


def test_pf_add_level_mismatch():
    with pytest.raises(LevelMismatchError):
        pf_add(ProfiniteInt(4, 1), ProfiniteInt(6, 1))


def test_pf_group_laws():
    import random

    rng = random.Random(0)
    for _ in range(200):
        m = rng.randint(1, 60)
        a, b, c = (ProfiniteInt(m, rng.randrange(m)) for _ in range(3))
        assert pf_add(pf_add(a, b), c) == pf_add(a, pf_add(b, c))
        assert pf_add(a, b) == pf_add(b, a)
        assert pf_add(a, -a) == ProfiniteInt(m, 0)


def test_pf_project_examples():
    x = ProfiniteInt(12, 7)
    assert pf_project(x, 4) == 3
    assert pf_project(x, 1) == 0
    assert pf_project(x, 12) == 7
    with pytest.raises(DomainError):
        pf_project(x, 5)


def test_pf_project_compatible():
    x = ProfiniteInt(60, 43)
    for d in (1, 2, 3, 4, 5, 6, 10, 12, 15, 20, 30, 60):
        for e in (dd for dd in range(1, d + 1) if d % dd == 0):
            assert x.project(d) % e == x.project(e)


def test_polar_normalization_and_zero():
    z = PolarComplex(F(0), F(3, 4))
    assert z.turns == 0 and z.is_zero
    z = PolarComplex(F(2), F(7, 4))
    assert z.turns == F(3, 4)
    with pytest.raises(DomainError):
        PolarComplex(F(-1), F(0))
    with pytest.raises(DomainError):
        PolarComplex(0.5, F(0))


@settings(max_examples=150, deadline=None)
@given(positive_rationals, rationals, positive_rationals, rationals)
def test_polar_multiplication_abelian_exact(r1, t1, r2, t2):
    a = PolarComplex(r1, t1)
    b = PolarComplex(r2, t2)
    assert a * b == b * a
    assert (a * b).rho == r1 * r2
    assert ((a * b).turns - (t1 + t2)).denominator == 1


def test_cover_map_examples():
    assert cover_map(1, 2, PolarComplex(F(1), F(1, 4))) == PolarComplex(F(1), F(1, 2))
    z = PolarComplex(F(5, 3), F(7, 11))
    assert cover_map(7, 7, z) == z
    assert cover_map(2, 6, PolarComplex(F(2), F(1, 3))) == PolarComplex(F(8), F(0))
    with pytest.raises(DomainError):
        cover_map(4, 6, z)


def test_cover_functoriality_divisor_chains():
    z = PolarComplex(F(3, 2), F(5, 7))
    for l in (12, 36, 360):
        for m in (d for d in range(1, l + 1) if l % d == 0):
            for n in (d for d in range(1, m + 1) if m % d == 0):
                assert cover_map(n, m, cover_map(m, l, z)) == cover_map(n, l, z)


def test_phi_examples():
    p = phi(ProfiniteInt(4, 1))
    assert p.top == PolarComplex(F(1), F(1, 4))
    assert p.base_coordinate() == PolarComplex.one()
    assert phi(ProfiniteInt(7, 0)).top == PolarComplex.one()
    p = phi(ProfiniteInt(6, 3))
    assert p.top == PolarComplex(F(1), F(1, 2))
    assert p.coordinate(2) == PolarComplex(F(1), F(1, 2))


def test_phi_lands_in_fiber_and_fills_it():
    for m in range(1, 101):
        seen = set()
        for a in range(m):
            p = phi(ProfiniteInt(m, a))
            assert p.base_coordinate() == PolarComplex.one()
            seen.add(p.top)
        # every level-m point with trivial base coordinate is phi of a
        # unique residue: rho = 1 and turns in (1/m)Z
        assert len(seen) == m
        assert seen == {PolarComplex(F(1), F(k, m)) for k in range(m)}


def test_nu_examples():
    assert nu(1, 5) == phi(ProfiniteInt(5, 1))
    assert nu(0, 7).top == PolarComplex.one()
    assert nu(5, 5).top == PolarComplex.one()


def test_nu_phi_identity_across_levels():
    for m in (1, 2, 3, 5, 8, 30, 360, 1000):
        for n in range(-50, 51):
            assert nu(n, m) == phi(ProfiniteInt.from_int(n, m))


def test_sol_exp_examples():
    a = ProfiniteInt(4, 1)
    assert sol_exp(a, 1).top == PolarComplex(F(1), F(1, 2))
    t = F(3, 7)
    assert sol_exp(ProfiniteInt(9, 0), t) == nu(t, 9)
    assert sol_exp(a, 0) == phi(a)


def test_solenoid_multiplication_and_level_guard():
    x = SolenoidPoint(6, PolarComplex(F(2), F(1, 3)))
    y = SolenoidPoint(6, PolarComplex(F(3), F(1, 2)))
    assert (x * y).top == PolarComplex(F(6), F(5, 6))
    with pytest.raises(LevelMismatchError):
        x * SolenoidPoint(5, PolarComplex.one())


def test_refine_examples():
    assert refine(SolenoidPoint(1, PolarComplex.one()), 3, 1).top == PolarComplex(F(1), F(1, 3))
    assert refine(SolenoidPoint(2, PolarComplex(F(1), F(1, 2))), 4, 0).top == PolarComplex(F(1), F(1, 4))


def test_refine_section_property():
    z = SolenoidPoint(3, PolarComplex(F(16, 81), F(2, 3)))
    for branch in range(4):
        lifted = refine(z, 12, branch)
        assert cover_map(3, 12, lifted.top) == z.top
    with pytest.raises(DomainError):
        refine(z, 12, 4)
    with pytest.raises(DomainError):
        refine(z, 7, 0)  # 3 does not divide 7


def test_refine_requires_exact_radicals():
    z = SolenoidPoint(1, PolarComplex(F(2), F(0)))
    with pytest.raises(DomainError, match="perfect"):
        refine(z, 2, 0)
    ok = refine(SolenoidPoint(1, PolarComplex(F(4, 9), F(0))), 2, 0)
    assert ok.top.rho == F(2, 3)


def test_compatibility_under_projection():
    z = SolenoidPoint(12, PolarComplex(F(1), F(5, 12)))
    for d in (1, 2, 3, 4, 6, 12):
        for e in (dd for dd in range(1, d + 1) if d % dd == 0):
            assert z.coordinate(d).pow_int(d // e) == z.coordinate(e)


def test_common_level():
    assert common_level(4, 6) == 12
    assert common_level(1) == 1


def test_rendering_fixed():
    assert str(SolenoidPoint(4, PolarComplex(F(1), F(1, 4)))) == "level=4 rho=1 turns=1/4"
    assert str(PolarComplex(F(8), F(0))) == "rho=8 turns=0"
    assert str(ProfiniteInt(12, 7)) == "7 mod 12"
