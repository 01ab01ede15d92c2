"""Spinor calculus, nil-level hat operators, q-Toda, and the spinor
q-Whittaker function."""

import random

import pytest

from hecke_forge.laurent import LaurentPoly
from hecke_forge.nilspinor import (
    Spinor, apply_hat, hat_T, hat_T_prime, hat_X, hat_X_prime, hat_Y,
    hat_Y_gaussian, hat_Y_prime, hat_pi, intertwine_check,
    nildaha_relations_check, presentations_agree, qtoda_apply,
    spinor_polyrep_invariance, spinor_polyrep_membership,
    symmetrization_check, whittaker_omega, whittaker_symmetrized,
)
from hecke_forge.scalars import Scalar, SCALAR_ONE

ONE = LaurentPoly.one("X")
ZERO = LaurentPoly.zero("X")


def test_hat_examples():
    assert hat_Y(Spinor(ONE, ONE.copy())) == Spinor(ZERO, ONE)
    assert hat_pi(Spinor(LaurentPoly.monomial("X", 1), ZERO)) == \
        Spinor(ONE, ONE.copy())
    assert hat_T(Spinor(ONE, ONE.copy())) == Spinor(ZERO, ZERO)
    with pytest.raises(ValueError):
        apply_hat("nope", Spinor(ONE, ONE))


def test_qtoda_witness():
    sym1 = Spinor(ONE, ONE.copy())
    expect = LaurentPoly("X", {0: Scalar.integer(2), -2: -SCALAR_ONE})
    assert qtoda_apply(sym1) == Spinor(expect, expect.copy())
    assert hat_Y(sym1) + hat_Y_prime(sym1) == qtoda_apply(sym1)
    x = LaurentPoly.monomial("X", 1)
    lx = qtoda_apply(Spinor(x, x.copy()))
    comp = LaurentPoly("X", {1: Scalar.q_half(1) + Scalar.q_half(-1),
                             -1: -Scalar.q_half(1)})
    assert lx == Spinor(comp, comp.copy())


def test_that_commutes_with_toda():
    f = Spinor(LaurentPoly.monomial("X", 2), ONE.copy())
    lhs = hat_T(hat_Y(f) + hat_Y_prime(f))
    rhs = hat_Y(hat_T(f)) + hat_Y_prime(hat_T(f))
    assert lhs == rhs


def test_nildaha_relations():
    assert nildaha_relations_check(5) == []


def test_super_presentation():
    rng = random.Random(9)
    for _ in range(30):
        f = Spinor(LaurentPoly("X", {rng.randint(-3, 3): Scalar.integer(
            rng.randint(-4, 4) or 1) for _ in range(2)}),
            LaurentPoly("X", {rng.randint(-3, 3): Scalar.integer(
                rng.randint(-4, 4) or 2) for _ in range(2)}))
        g = Spinor(LaurentPoly.monomial("X", rng.randint(-2, 2)),
                   LaurentPoly.monomial("X", rng.randint(-2, 2)))
        f0, f1 = f.super_components()
        assert Spinor.from_super(f0, f1) == f
        g0, g1 = g.super_components()
        via_super = Spinor.from_super(f0 * g0 + f1 * g1, f0 * g1 + f1 * g0)
        assert via_super == f * g


def test_principal_embedding_commutes():
    h = LaurentPoly("X", {3: SCALAR_ONE, -1: Scalar.integer(2)})
    pr = Spinor.principal(h)
    # X^rho acts as {X, X^-1}
    lifted = Spinor(pr.f1.mul_monomial(1), pr.f2.mul_monomial(-1))
    assert lifted == Spinor.principal(h.mul_monomial(1))
    # Gamma^rho acts as {Gamma, Gamma^-1}
    lifted = Spinor(pr.f1.act_gamma(1), pr.f2.act_gamma(-1))
    assert lifted == Spinor.principal(h.act_gamma(1))


def test_whittaker_presentations_and_symmetrization():
    assert presentations_agree(6)
    assert symmetrization_check(6)
    om = whittaker_omega(6)
    assert om.component(1, 0) == LaurentPoly.one("L")
    assert om.component(2, 0) == LaurentPoly.one("L")
    # m = 1 first component: q^(1/4)(L + L^-1)/(1 - q)
    c = Scalar.u_pow(1) / (SCALAR_ONE - Scalar.q_pow(1))
    assert om.component(1, 1) == LaurentPoly("L", {1: c, -1: c})
    sym = whittaker_symmetrized(6)
    assert sym.component(1, 3) == sym.component(2, 3)


def test_intertwining_identities():
    assert intertwine_check(6) == []


def test_polyrep_membership():
    assert spinor_polyrep_membership(Spinor(ONE, ONE.copy()))
    assert spinor_polyrep_membership(Spinor(LaurentPoly.monomial("X", 2),
                                            ZERO))
    # {X^2, X} = {X^2, 0} + {0, X} lies in the span
    assert spinor_polyrep_membership(Spinor(LaurentPoly.monomial("X", 2),
                                            LaurentPoly.monomial("X", 1)))
    # distinct constants break the C{1,1} condition
    assert not spinor_polyrep_membership(
        Spinor(ONE, ONE.smul(Scalar.integer(2))))
    # negative degrees are outside
    assert not spinor_polyrep_membership(Spinor(LaurentPoly.monomial("X", -1),
                                                ZERO))


def test_polyrep_invariance():
    assert spinor_polyrep_invariance(6)
    # the Gaussian-conjugated Yhat sends {X, 0} inside the space
    img = hat_Y_gaussian(Spinor(LaurentPoly.monomial("X", 1), ZERO))
    assert spinor_polyrep_membership(img)


def test_hat_x_shapes():
    f = Spinor(LaurentPoly.monomial("X", 2), LaurentPoly.monomial("X", 1))
    assert hat_X(f) == Spinor(LaurentPoly.monomial("X", 3), ZERO)
    assert hat_X_prime(f) == Spinor(ZERO, LaurentPoly.monomial("X", 2))
    total = hat_X(f) + hat_X_prime(f)
    assert total == Spinor(f.f1.mul_monomial(1), f.f2.mul_monomial(1))
