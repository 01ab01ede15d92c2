"""Affine symmetrizers: normal forms, the rational closed form, the diamond
form, Jackson numerics, ct-series and the Kac-Moody limit identities."""

import cmath
import math

import pytest

from hecke_forge import daha1
from hecke_forge.affsym import (
    AhaOpExpr, JacksonConfig, affine_poincare_via_rational, coefficient_probe,
    ct_inv_value, ct_series, ct_series_tinf_limit, denominator_identity_check,
    diamond_form, epoly_numeric, expand_in_e_basis, jackson_sum,
    km_numerator, level_one_constant, level_one_identity_check, level_one_rhs,
    phat_equals_sigma, phat_rational_apply, phat_trunc_apply_one,
    qpochhammer_series, sigma_hat, siminv_defect_valuations, trunc_Phat,
)
from hecke_forge.laurent import LaurentPoly, TruncSeries
from hecke_forge.rootsys import AffWeylElt, get_rs, length
from hecke_forge.scalars import Scalar, SCALAR_ONE


def test_trunc_phat_m1_display():
    plus = AhaOpExpr.one() + AhaOpExpr.T_inv().smul(Scalar.t_half(-1))
    yy = AhaOpExpr.from_y(LaurentPoly("Y", {1: Scalar.t_half(-1),
                                            -1: Scalar.t_half(-1)}))
    assert trunc_Phat(1) == yy * plus + plus


def test_sigma_hat_m2_display():
    s2 = sigma_hat(2)
    core = LaurentPoly("Y", {0: Scalar.t_pow(-1),
                             1: Scalar.t_half(-1), -1: Scalar.t_half(-1),
                             2: Scalar.t_pow(-1), -2: Scalar.t_pow(-1)})
    plus = AhaOpExpr.one() + AhaOpExpr.T_inv().smul(Scalar.t_half(-1))
    assert s2 == AhaOpExpr.from_y(core) * plus


@pytest.mark.parametrize("M", range(1, 9))
def test_phat_equals_sigma(M):
    assert phat_equals_sigma(M)


def test_phat_on_one_series_head():
    # partial sums approach 2 + 4t^-1 + 4t^-2 + ...
    val = phat_trunc_apply_one(6)
    # coefficients of t^0..t^-4 must already be 2, 4, 4, 4, 4
    t = Scalar.t_pow(1)
    head = Scalar.integer(2)
    for j in range(1, 5):
        head = head + Scalar.integer(4) * t ** (-j)
    diff = val - head
    # remaining terms all carry t^(-5) or deeper
    num, den = diff.num, diff.den
    deg_num = max(e[1] for e in num)
    deg_den = max(e[1] for e in den)
    assert deg_num - deg_den <= -10  # v-degree: t^(-5) = v^(-10)


def test_rational_poincare_values():
    one = SCALAR_ONE
    t = Scalar.t_pow(1)
    assert affine_poincare_via_rational("A1") == \
        Scalar.integer(2) * (one + t.inverse()) / (one - t.inverse())
    assert affine_poincare_via_rational("A2") == \
        Scalar.integer(3) * (one - Scalar.t_pow(-3)) \
        / (one - t.inverse()) ** 3


def test_e_basis_expansion_roundtrip():
    f = LaurentPoly("X", {2: SCALAR_ONE, -1: Scalar.integer(3),
                          0: Scalar.t_half(1)})
    coeffs = expand_in_e_basis(f)
    back = LaurentPoly.zero("X")
    for n, c in coeffs.items():
        back = back + daha1.epoly(n).smul(c)
    assert back == f


def test_phat_rational_on_one():
    out = phat_rational_apply(daha1.X_ONE)
    assert out == LaurentPoly.const("X", affine_poincare_via_rational("A1"))


def test_diamond_form_properties():
    x = LaurentPoly.monomial("X", 1)
    one = daha1.X_ONE
    assert diamond_form(one, one).is_one()
    g = LaurentPoly("X", {2: SCALAR_ONE, -1: Scalar.integer(3)})
    h = LaurentPoly("X", {1: Scalar.t_half(1), 0: SCALAR_ONE})
    assert diamond_form(g, h) == diamond_form(h, g)
    # T- and Y-self-adjointness
    assert diamond_form(daha1.op_T(x), g) == diamond_form(x, daha1.op_T(g))
    assert diamond_form(daha1.op_Y(x), g) == diamond_form(x, daha1.op_Y(g))
    lhs = diamond_form(daha1.op_T(x), one)
    assert lhs == diamond_form(x, one) * Scalar.t_half(1)


@pytest.mark.parametrize("M", (2, 4, 6, 8))
def test_siminv_valuations(M):
    vals = siminv_defect_valuations(M)
    assert vals, "defect operator should have matched coefficients"
    for (n, eps), (got, need) in vals.items():
        assert got is not None and got >= need, ((n, eps), got, need)


CFG = JacksonConfig(q0=0.3, t0=2.0, xi=0.11 + 0.07j, cutoff=40, tol=1e-9)


def test_jackson_pseudo_constant():
    r = jackson_sum(lambda x: 1.0, CFG, 0)
    expect = 6.0 / ct_inv_value(CFG)
    assert abs(r.value - expect) / abs(expect) < 1e-8
    assert r.tail_estimate < 1e-8


def test_jackson_vanishing_level0():
    tneg = 0.3 ** -3.0  # t = q^k at k = -3
    cfg = JacksonConfig(q0=0.3, t0=tneg, xi=0.11 + 0.07j, cutoff=40, tol=1e-9)
    scale = abs(jackson_sum(lambda x: 1.0, cfg, 0).value)
    for a in (1, -1, 2, -2):
        r = jackson_sum(epoly_numeric(a, cfg), cfg, 0)
        assert abs(r.value) / scale < 1e-9


def test_level_one_identity():
    for a in (0, -1):
        lhs = jackson_sum(epoly_numeric(a, CFG), CFG, 1).value
        rhs = level_one_rhs(a, CFG)
        assert abs(lhs - rhs) / abs(rhs) < 1e-7


def test_vanishing_at_special_t():
    q0 = 0.3
    cfg = JacksonConfig(q0=q0, t0=math.sqrt(q0), xi=0.11 + 0.07j,
                        cutoff=60, tol=1e-10)
    lhs = jackson_sum(lambda x: 1.0, cfg, 1).value
    assert abs(lhs) < 1e-7
    cfg2 = JacksonConfig(q0=q0, t0=q0, xi=0.11 + 0.07j)
    assert abs(level_one_constant(cfg2)) < 1e-7
    cfg3 = JacksonConfig(q0=q0, t0=2.0, xi=0.11 + 0.07j)
    assert abs(level_one_constant(cfg3)) > 0.1


def test_jackson_annihilation_level1():
    # J o (T - t^(1/2)) = 0 numerically: apply to the image of (1+t^(1/2)T)
    # by evaluating T(f) for f = E_1 exactly first
    f = daha1.epoly(1) + daha1.op_T(daha1.epoly(1)).smul(Scalar.t_half(1))
    coeffs = [(e, s.specialize(CFG.q0, CFG.t0)) for e, s in f.c.items()]
    logq = cmath.log(CFG.q0)

    def fn(x):
        xv = cmath.exp(logq * x)
        return sum(c * xv ** e for e, c in coeffs)
    # T(f) = t^(1/2) f for the symmetrized image, so J(T f - t^(1/2) f) = 0
    tf = daha1.op_T(f)
    tcoeffs = [(e, s.specialize(CFG.q0, CFG.t0)) for e, s in tf.c.items()]

    def tfn(x):
        xv = cmath.exp(logq * x)
        return sum(c * xv ** e for e, c in tcoeffs)
    lhs = jackson_sum(lambda x: tfn(x) - math.sqrt(2.0) * fn(x), CFG, 1).value
    scale = abs(jackson_sum(fn, CFG, 1).value) + 1.0
    assert abs(lhs) / scale < 1e-9


def test_ct_series_heads():
    ct = ct_series(3, "A1", inverted=False)
    assert ct.coeff(0) == LaurentPoly.one("X")
    t = Scalar.t_pow(1)
    # q^1 coefficient is (1 - t)^2
    assert ct.coeff(4).coeff(0) == (SCALAR_ONE - t) ** 2
    # t -> infinity limit of ct(t^-1) is prod 1/(1-q^i)
    lim = ct_series_tinf_limit(4)
    expect = TruncSeries.one("X", 16)
    for j in range(1, 5):
        expect = expect.mul_one_minus_inverse(4 * j, LaurentPoly.one("X"))
    assert lim == expect


def test_ct_numeric_matches_series():
    # numeric ct(t^-1) against the truncated series at (q, t) = (0.3, 2.0)
    ser = ct_series(28, "A1", inverted=True)
    acc = 0j
    for p, lp in ser.c.items():
        acc += lp.coeff(0).specialize(0.3, 2.0) * (0.3 ** 0.25) ** p
    assert abs(acc - ct_inv_value(CFG)) < 1e-9


def test_km_numerators_mod_q2():
    n1 = km_numerator(1, 2)
    assert n1.coeff(0) == LaurentPoly("X", {0: SCALAR_ONE, 2: -SCALAR_ONE})
    assert n1.coeff(1) == LaurentPoly("X", {-1: SCALAR_ONE, 3: -SCALAR_ONE})
    assert n1.coeff(5) == LaurentPoly("X", {-3: -SCALAR_ONE, 5: SCALAR_ONE})
    n0 = km_numerator(0, 2)
    two = Scalar.integer(2)
    assert n0.coeff(0) == LaurentPoly("X", {0: two, 2: -two})
    assert n0.coeff(4) == LaurentPoly("X", {-2: -two, 4: two})


def test_theta_identities():
    assert denominator_identity_check(4)
    assert level_one_identity_check(4)


def test_qpochhammer_series_head():
    s = qpochhammer_series(3)
    assert s.coeff(0) == LaurentPoly.one("X")
    assert s.coeff(4) == LaurentPoly.const("X", -SCALAR_ONE)


def test_coefficient_probe():
    rs = get_rs("A1")
    for n in range(-5, 6):
        for eps in (0, 1):
            w_mat = rs.w_id if eps == 0 else rs.simple_matrix(0)
            if length(AffWeylElt(rs, (n,), w_mat)) <= 4:
                ratio = coefficient_probe((n, eps), CFG, M=30)
                assert abs(ratio - 1) < 1e-6, ((n, eps), ratio)
