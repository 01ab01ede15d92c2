"""Affine Hecke algebra layer: Lusztig operators, symmetrizer, the operator
form of the spherical-function formula, Matsumoto functions, limits, and the
A2 Hall-Littlewood polynomials."""

import random

import pytest

from hecke_forge.aha import (
    act_simple, check_operator_macdonald, hall_littlewood_A2,
    hall_littlewood_A2_projector, limit_family, lusztig_T, lusztig_T_inv,
    matsumoto_eps, monomial_sym, op_pi_A1, poincare_t, schur_chi,
    spherical_phi, symmetrize_P, weyl_sum_mtilde, y_monomial,
)
from hecke_forge.laurent import LaurentPoly
from hecke_forge.rootsys import get_rs
from hecke_forge.scalars import Scalar, SCALAR_ONE

A1 = get_rs("A1")
A2 = get_rs("A2")
T_HALF = Scalar.t_half(1)
T_MHALF = Scalar.t_half(-1)


def test_lusztig_basics():
    one = LaurentPoly.one("Y")
    assert lusztig_T(A1, 0, one) == one.smul(T_HALF)
    got = lusztig_T(A1, 0, LaurentPoly.monomial("Y", 1))
    expect = LaurentPoly("Y", {-1: T_HALF, 1: T_HALF - T_MHALF})
    assert got == expect


@pytest.mark.parametrize("m", range(-5, 6))
def test_quadratic_relation(m):
    f = LaurentPoly.monomial("Y", m)
    g = lusztig_T(A1, 0, f) - f.smul(T_HALF)
    h = lusztig_T(A1, 0, g) + g.smul(T_MHALF)
    assert h.is_zero()


def test_braid_relation_a2():
    for key in [(1, 0), (2, 1), (0, 3), (-1, 2)]:
        f = LaurentPoly.monomial("Y", key)
        lhs = lusztig_T(A2, 0, lusztig_T(A2, 1, lusztig_T(A2, 0, f)))
        rhs = lusztig_T(A2, 1, lusztig_T(A2, 0, lusztig_T(A2, 1, f)))
        assert lhs == rhs


def test_symmetrizer_projects():
    one = LaurentPoly.one("Y")
    assert symmetrize_P(A1, one) == one
    y = LaurentPoly.monomial("Y", 1)
    t = Scalar.t_pow(1)
    expect = LaurentPoly("Y", {1: t / (SCALAR_ONE + t),
                               -1: t / (SCALAR_ONE + t)})
    assert symmetrize_P(A1, y) == expect
    for m in range(-4, 5):
        p = symmetrize_P(A1, LaurentPoly.monomial("Y", m))
        assert symmetrize_P(A1, p) == p


def test_bernstein_center():
    # W-invariant orbit sums commute with T_i
    orbit = set()
    f = LaurentPoly.zero("Y")
    for w in A2.weyl:
        key = A2.w_apply(w, (1, 1))
        if key not in orbit:
            orbit.add(key)
            f = f + LaurentPoly.monomial("Y", key)
    g = LaurentPoly.monomial("Y", (1, 0)) + LaurentPoly.monomial("Y", (0, -1))
    for i in (0, 1):
        assert lusztig_T(A2, i, f * g) == f * lusztig_T(A2, i, g)


def test_operator_macdonald_a1():
    for m in range(-6, 7):
        assert check_operator_macdonald(A1, LaurentPoly.monomial("Y", m))
    # at f = Y both sides are Y + Y^-1
    lhs = symmetrize_P(A1, LaurentPoly.monomial("Y", 1)) \
        .smul(poincare_t(A1, inv=True))
    assert lhs == LaurentPoly("Y", {1: SCALAR_ONE, -1: SCALAR_ONE})
    # at f = 1 both sides are P(t^-1)
    assert weyl_sum_mtilde(A1, LaurentPoly.one("Y")) == \
        LaurentPoly.const("Y", poincare_t(A1, inv=True))


def test_operator_macdonald_a2():
    for key in [(0, 0), (1, 0), (0, 1), (1, 1), (2, 0), (2, 1), (1, 2),
                (3, 0), (0, 3)]:
        assert check_operator_macdonald(A2, LaurentPoly.monomial("Y", key))


def test_matsumoto_values():
    assert matsumoto_eps(0) == LaurentPoly.one("Y")
    assert matsumoto_eps(1) == LaurentPoly("Y", {1: T_MHALF})
    expect = LaurentPoly("Y", {-1: T_MHALF,
                               1: T_MHALF - Scalar.t_half(-3)})
    assert matsumoto_eps(-1) == expect


def test_eps_pieri_rules():
    tdiff = T_HALF - T_MHALF
    for m in range(0, 7):
        assert matsumoto_eps(m).mul_monomial(1) == \
            matsumoto_eps(m + 1).smul(T_HALF)
        assert matsumoto_eps(m + 1).mul_monomial(-1) == \
            matsumoto_eps(m).smul(T_MHALF)
        lhs = matsumoto_eps(-m).mul_monomial(-1)
        rhs = matsumoto_eps(-m - 1).smul(T_HALF) \
            - matsumoto_eps(m + 1).smul(tdiff)
        assert lhs == rhs
    for m in range(1, 7):
        lhs = matsumoto_eps(-m).mul_monomial(1)
        rhs = matsumoto_eps(-m + 1).smul(T_MHALF) \
            + matsumoto_eps(m + 1).smul(tdiff)
        assert lhs == rhs


def test_pi_on_eps():
    for m in range(-6, 7):
        assert op_pi_A1(matsumoto_eps(m)) == matsumoto_eps(1 - m)


def test_spherical_values_and_methods():
    one = SCALAR_ONE
    t = Scalar.t_pow(1)
    phi1 = spherical_phi(1, "closed")
    denom = T_HALF + T_MHALF
    assert phi1 == LaurentPoly("Y", {1: denom.inverse(),
                                     -1: denom.inverse()})
    phi2 = spherical_phi(2, "closed")
    c0 = Scalar.integer(2) / (one + t) - t.inverse()
    assert phi2 == LaurentPoly("Y", {2: (one + t).inverse(),
                                     -2: (one + t).inverse(), 0: c0})
    for m in range(0, 9):
        closed = spherical_phi(m, "closed")
        assert spherical_phi(m, "pieri") == closed
        if m <= 6:
            assert spherical_phi(m, "projector") == closed


def test_limit_diagram():
    for m in range(0, 9):
        assert limit_family(m, "tinf", "phi") == schur_chi(m)
        assert limit_family(m, "t1", "phi") == monomial_sym(m)
        assert limit_family(m, "t0", "phi") == \
            schur_chi(m - 2).smul(Scalar.integer(-1))
        assert limit_family(-m, "tinf", "eps") == schur_chi(m)
        assert limit_family(-m, "t1", "eps") == LaurentPoly.monomial("Y", -m)
    with pytest.raises(ArithmeticError):
        limit_family(-2, "t0", "eps")


def test_hall_littlewood_a2():
    assert hall_littlewood_A2((0, 0)) == LaurentPoly("Y",
                                                     {(0, 0): SCALAR_ONE})
    for b in [(1, 0), (0, 1), (1, 1), (2, 0), (2, 1), (2, 2)]:
        hl = hall_littlewood_A2(b)
        assert hl == hall_littlewood_A2_projector(b)
        for i in (0, 1):
            assert act_simple(A2, i, hl) == hl
    with pytest.raises(ValueError):
        hall_littlewood_A2((-1, 0))
    with pytest.raises(ValueError):
        hall_littlewood_A2((4, 4))


def test_t_inverse_is_inverse():
    rng = random.Random(5)
    for _ in range(20):
        f = LaurentPoly("Y", {rng.randint(-4, 4): Scalar.integer(
            rng.randint(-3, 3) or 1) for _ in range(3)})
        assert lusztig_T_inv(A1, 0, lusztig_T(A1, 0, f)) == f
