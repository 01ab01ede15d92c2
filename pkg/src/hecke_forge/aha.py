"""Affine Hecke algebra acting on Y-Laurent polynomials (A1 and A2).

The representation carrier is the Y-polynomial ring with W acting through
w(Y_b) = Y_{w(b)}; T_i acts by the Lusztig operator
    T_i(f) = t^(1/2) s_i(f) + (t^(1/2) - t^(-1/2)) (s_i(f) - f)/(Y_{a_i}^(-1) - 1),
a_i the i-th simple coroot.  The division is exact; a failure is an internal
error, never a property of valid input.

A1 Y-polynomials use integer exponents (powers of Y = Y_omega); A2 uses
pairs in the coweight basis.
"""

from __future__ import annotations

from .scalars import Scalar, SCALAR_ONE, SCALAR_ZERO
from .laurent import LaurentPoly
from .rootsys import get_rs

_T_HALF = Scalar.t_half(1)
_T_MINUS_HALF = Scalar.t_half(-1)
_T_DIFF = _T_HALF - _T_MINUS_HALF


def ypoly(kind, coeffs=None):
    return LaurentPoly("Y", coeffs)


def _zero_key(rs):
    return (0,) * rs.n if rs.n > 1 else 0


def _mono_key(rs, b):
    return tuple(b) if rs.n > 1 else (b[0] if isinstance(b, (tuple, list)) else b)


def y_monomial(rs, b, s=SCALAR_ONE):
    return LaurentPoly("Y", {_mono_key(rs, b): s})


def act_weyl(rs, w, f):
    """w(Y_b) = Y_{w(b)} on exponents."""
    if rs.n == 1:
        if w == rs.w_id:
            return f.copy()
        return f.act_s()
    return f.act_w(w)


def act_simple(rs, i, f):
    return act_weyl(rs, rs.simple_matrix(i), f)


def lusztig_T(rs, i, f):
    """The Lusztig operator T_i on Y-polynomials."""
    sf = act_simple(rs, i, f)
    diff = sf - f
    if diff.is_zero():
        return sf.smul(_T_HALF)
    # (s_i(f) - f)/(Y^{-a} - 1) with a the simple coroot;
    # Y^{-a} - 1 = -(1 - Y^{-a})
    a = _mono_key(rs, rs.simple_roots[i])
    a_neg = LaurentPoly._kneg(a)
    quot = diff.divexact_one_minus(a_neg).smul(Scalar.integer(-1))
    return sf.smul(_T_HALF) + quot.smul(_T_DIFF)


def lusztig_T_inv(rs, i, f):
    """T_i^(-1) = T_i - (t^(1/2) - t^(-1/2))."""
    return lusztig_T(rs, i, f) - f.smul(_T_DIFF)


def apply_word(rs, word, f, inverse=False):
    """T_w along a reduced word (applied right factor first)."""
    if inverse:
        for i in word:
            f = lusztig_T_inv(rs, i, f)
        return f
    for i in reversed(word):
        f = lusztig_T(rs, i, f)
    return f


def poincare_t(rs, inv=False):
    """P(t) (or P(t^-1)) as a Scalar."""
    acc = SCALAR_ZERO
    for w in rs.weyl:
        l = rs.w_length(w)
        acc = acc + (Scalar.t_pow(-l) if inv else Scalar.t_pow(l))
    return acc


def symmetrize_P(rs, f):
    """The t-symmetrizer P_+ = sum_w t^(l(w)/2) T_w / sum_w t^(l(w))."""
    acc = LaurentPoly.zero("Y")
    for w in rs.weyl:
        word = rs.weyl_words[w]
        acc = acc + apply_word(rs, word, f).smul(Scalar.t_half(len(word)))
    return acc.smul(poincare_t(rs).inverse())


def lp_one(rs):
    return LaurentPoly("Y", {_zero_key(rs): SCALAR_ONE})


def _mtilde_numerator_product(rs, f, tinv_side=True):
    """f * prod_{alpha>0} (1 - t^(-1) Y_{alpha}^(-1)) * prod_{alpha>0}(1 - Y_alpha)."""
    out = f.copy()
    one = lp_one(rs)
    for alpha in rs.pos_roots:
        a = _mono_key(rs, alpha)
        a_neg = LaurentPoly._kneg(a)
        out = out * (one - LaurentPoly.monomial("Y", a_neg, Scalar.t_pow(-1)))
        out = out * (one - LaurentPoly.monomial("Y", a))
    return out


def weyl_sum_mtilde(rs, f):
    """(sum_w w) o Mtilde applied to f, computed exactly.

    Mtilde = prod_{alpha>0} (1 - t^(-1) Y_alpha^(-1))/(1 - Y_alpha^(-1)); the
    W-invariant common denominator prod_{all roots}(1 - Y_alpha^(-1)) is
    cleared, the Weyl sum taken, and the result divided back out exactly.
    """
    acc = LaurentPoly.zero("Y")
    for w in rs.weyl:
        acc = acc + act_weyl(rs, w, _mtilde_numerator_product(rs, f))
    # divide by prod_{alpha>0}(1 - Y^{-alpha})(1 - Y^{alpha})
    for alpha in rs.pos_roots:
        a = _mono_key(rs, alpha)
        acc = acc.divexact_one_minus(a)
        acc = acc.divexact_one_minus(LaurentPoly._kneg(a))
    return acc


def check_operator_macdonald(rs, f):
    """P(t^(-1)) P_+(f) == (sum_w w)(Mtilde f), both exact."""
    lhs = symmetrize_P(rs, f).smul(poincare_t(rs, inv=True))
    rhs = weyl_sum_mtilde(rs, f)
    return lhs == rhs


# ---------------------------------------------------------------------------
# rank one: Matsumoto and Macdonald spherical functions
# ---------------------------------------------------------------------------

def matsumoto_eps(m):
    """The Matsumoto function eps_m as an A1 Y-polynomial.

    eps_m = t^(-m/2) Y^m for m >= 0; for negative index
    eps_{-m} = t^(-(m+1)/2) (t^(1/2) Y^(-m)
               + (t^(1/2) - t^(-1/2)) (Y^(-m) - Y^m)/(Y^(-2) - 1)).
    """
    if m >= 0:
        return LaurentPoly("Y", {m: Scalar.t_half(-m)})
    n = -m
    lead = LaurentPoly("Y", {-n: _T_HALF})
    num = LaurentPoly("Y", {-n: SCALAR_ONE, n: -SCALAR_ONE})
    quot = num.divexact_one_minus(-2).smul(Scalar.integer(-1))
    return (lead + quot.smul(_T_DIFF)).smul(Scalar.t_half(-(n + 1)))


def spherical_phi(m, method="pieri"):
    """Macdonald spherical function phi_m (A1), by Pieri recursion or the
    closed Weyl-sum formula."""
    if m < 0:
        raise ValueError("phi is indexed by m >= 0")
    rs = get_rs("A1")
    if method == "pieri":
        # (Y + Y^-1) phi_m = t^(1/2) phi_{m+1} + t^(-1/2) phi_{m-1},
        # (Y + Y^-1) phi_0 = (t^(1/2) + t^(-1/2)) phi_1
        phis = [LaurentPoly.one("Y")]
        yy = LaurentPoly("Y", {1: SCALAR_ONE, -1: SCALAR_ONE})
        if m >= 1:
            phis.append((yy * phis[0]).smul(
                (_T_HALF + _T_MINUS_HALF).inverse()))
        for j in range(2, m + 1):
            nxt = (yy * phis[j - 1] - phis[j - 2].smul(_T_MINUS_HALF)) \
                .smul(_T_HALF.inverse())
            phis.append(nxt)
        return phis[m]
    if method == "closed":
        # t^(-m/2)/(1+t^(-1)) * [(Y^(m+1)-Y^(-m-1)) - t^(-1)(Y^(m-1)-Y^(1-m))]/(Y-Y^(-1))
        num = LaurentPoly("Y", {m + 1: SCALAR_ONE}) \
            - LaurentPoly("Y", {-(m + 1): SCALAR_ONE})
        lower = LaurentPoly("Y", {abs(m - 1): SCALAR_ONE}) \
            - LaurentPoly("Y", {-abs(m - 1): SCALAR_ONE})
        num = num - lower.smul(Scalar.t_pow(-1) if m >= 1
                               else -Scalar.t_pow(-1))
        # divide by Y - Y^(-1) = Y^(-1)(Y^2 - 1) = -Y^(-1)(1 - Y^2)
        quot = num.mul_monomial(1).divexact_one_minus(2) \
            .smul(Scalar.integer(-1))
        pref = Scalar.t_half(-m) * \
            (SCALAR_ONE + Scalar.t_pow(-1)).inverse()
        return quot.smul(pref)
    if method == "projector":
        return symmetrize_P(rs, matsumoto_eps(m))
    raise ValueError("unknown method %r" % method)


def schur_chi(m):
    """chi_m = (Y^(m+1) - Y^(-m-1))/(Y - Y^(-1)); chi_{-1} = 0, chi_{-2} = -1."""
    if m == -1:
        return LaurentPoly.zero("Y")
    if m < -1:
        return schur_chi(-m - 2).smul(Scalar.integer(-1))
    return LaurentPoly("Y", {m - 2 * j: SCALAR_ONE for j in range(m + 1)})


def monomial_sym(m):
    """M_m = (Y^m + Y^(-m))/2."""
    half = Scalar.integer(2).inverse()
    if m == 0:
        return LaurentPoly.one("Y")
    return LaurentPoly("Y", {m: half, -m: half})


def limit_family(m, limit, family="phi"):
    """Limits of the renormalized spherical families.

    family "phi": phitilde_m = t^(m/2) phi_m;
    family "eps": epstilde_m = t^(|m|/2) eps_m.
    limit in {"t0", "t1", "tinf"}.  The divergent branch (eps, negative
    index, t -> 0) raises ArithmeticError.
    """
    if family == "phi":
        f = spherical_phi(m, "closed").smul(Scalar.t_half(m))
    elif family == "eps":
        f = matsumoto_eps(m).smul(Scalar.t_half(abs(m)))
    else:
        raise ValueError("unknown family %r" % family)
    if limit == "t0":
        return f.map_coeffs(lambda s: s.limit_t0())
    if limit == "t1":
        return f.map_coeffs(lambda s: s.limit_t1())
    if limit == "tinf":
        return f.map_coeffs(lambda s: s.limit_tinf())
    raise ValueError("unknown limit %r" % limit)


def hall_littlewood_A2(b):
    """phi_b for A2 via the Weyl-sum (Hall-Littlewood) formula, with the
    symmetrizer route t^(-(rho,b)) P_+(Y_b) as a cross-check target."""
    rs = get_rs("A2")
    b = tuple(b)
    if not rs.is_dominant(b):
        raise ValueError("b must be dominant")
    if rs.pair(b, rs.theta) > 6:
        raise ValueError("weight too large for the desk-scale bound")
    f = y_monomial(rs, b)
    total = weyl_sum_mtilde(rs, f)
    pref = Scalar.t_half(-2 * int(rs.pair(rs.rho, b))) \
        * poincare_t(rs, inv=True).inverse()
    return total.smul(pref)


def hall_littlewood_A2_projector(b):
    rs = get_rs("A2")
    b = tuple(b)
    pref = Scalar.t_half(-2 * int(rs.pair(rs.rho, b)))
    return symmetrize_P(rs, y_monomial(rs, b)).smul(pref)


# -- operator helpers used by property tests ---------------------------------

def op_Y_mult(rs, b, f):
    """Multiplication by Y_b (the regular-representation action of Y)."""
    return f.mul_monomial(_mono_key(rs, b))


def op_pi_A1(f):
    """pi = Y T^(-1) acting on A1 Y-polynomials."""
    rs = get_rs("A1")
    return op_Y_mult(rs, (1,), lusztig_T_inv(rs, 0, f))
