"""Spinor calculus, hat-Dunkl operators for q-Toda, and the nonsymmetric
spinor q-Whittaker function.

Spinors are pairs {f1, f2}; s swaps the components without acting inside.
The hat operators act componentwise:
    Yhat {f1,f2} = {Gamma^(-1)(f1-f2), Gamma(f2) - Gamma((f2-f1)/X^2)},
    Yhat'{f1,f2} = {(1-X^(-2))Gamma(f1) + Gamma^(-1)(f2),
                    Gamma^(-1)(f2) - X^(-2) Gamma(f1)},
    That {f1,f2} = {0, f1-f2},   That'{f1,f2} = {f1, f1},
    pihat{f1,f2} = {X f2 + (f1-f2)/X, (f1-f2)/X},
    Xhat = pihat o That',  Xhat' = That o pihat.

The Whittaker series lives in nonnegative X-degrees with coefficients
Laurent in Lambda (variable tag "L"); the Gaussians q^(x^2) q^(lambda^2)
are never expanded -- every identity is checked in its conjugated form, via
    q^(-x^2) Yhat q^(x^2) = q^(1/4) X^(-1) Yhat
and the matching Lambda-side rules.
"""

from __future__ import annotations

from .scalars import Scalar, SCALAR_ONE, SCALAR_ZERO
from .laurent import LaurentPoly
from . import daha1

_Q_QUARTER = Scalar.u_pow(1)


class Spinor:
    """Pair of Laurent polynomials with index-swapping s."""

    __slots__ = ("f1", "f2")

    def __init__(self, f1, f2):
        self.f1 = f1
        self.f2 = f2

    @classmethod
    def principal(cls, f):
        return cls(f, f.act_s())

    @classmethod
    def diagonal(cls, f):
        return cls(f, f.copy())

    def __eq__(self, other):
        return self.f1 == other.f1 and self.f2 == other.f2

    def __add__(self, other):
        return Spinor(self.f1 + other.f1, self.f2 + other.f2)

    def __sub__(self, other):
        return Spinor(self.f1 - other.f1, self.f2 - other.f2)

    def __mul__(self, other):
        return Spinor(self.f1 * other.f1, self.f2 * other.f2)

    def smul(self, s):
        return Spinor(self.f1.smul(s), self.f2.smul(s))

    def act_s(self):
        return Spinor(self.f2, self.f1)

    def is_zero(self):
        return self.f1.is_zero() and self.f2.is_zero()

    def is_symmetric(self):
        return self.f1 == self.f2

    def super_components(self):
        """(f^0, f^1) with f^0 = (f1+f2)/2, f^1 = (f1-f2)/2."""
        half = Scalar.integer(2).inverse()
        return ((self.f1 + self.f2).smul(half),
                (self.f1 - self.f2).smul(half))

    @classmethod
    def from_super(cls, f0, f1):
        return cls(f0 + f1, f0 - f1)

    def __repr__(self):
        return "{%r, %r}" % (self.f1, self.f2)


def spinor_scalar_tilde_t(power=1):
    """The spinor constant t~^(1/2) = {t^(1/2), t^(-1/2)} (to a power)."""
    return (Scalar.t_half(power), Scalar.t_half(-power))


# ---------------------------------------------------------------------------
# hat operators
# ---------------------------------------------------------------------------

def hat_Y(sp):
    d = sp.f1 - sp.f2
    first = d.act_gamma(-1)
    second = sp.f2.act_gamma(1) - (-d).mul_monomial(-2).act_gamma(1)
    return Spinor(first, second)


def hat_Y_prime(sp):
    g1 = sp.f1.act_gamma(1)
    first = g1 - g1.mul_monomial(-2) + sp.f2.act_gamma(-1)
    second = sp.f2.act_gamma(-1) - g1.mul_monomial(-2)
    return Spinor(first, second)


def hat_T(sp):
    return Spinor(LaurentPoly.zero(sp.f1.var), sp.f1 - sp.f2)


def hat_T_prime(sp):
    return Spinor(sp.f1.copy(), sp.f1.copy())


def hat_pi(sp):
    d = (sp.f1 - sp.f2).mul_monomial(-1)
    return Spinor(sp.f2.mul_monomial(1) + d, d)


def hat_X(sp):
    return hat_pi(hat_T_prime(sp))


def hat_X_prime(sp):
    return hat_T(hat_pi(sp))


def qtoda_apply(sp):
    """The q-Toda spinor operator: (1 - X^(-2))Gamma + Gamma^(-1), diagonally."""
    def comp(f):
        g = f.act_gamma(1)
        return g - g.mul_monomial(-2) + f.act_gamma(-1)
    return Spinor(comp(sp.f1), comp(sp.f2))


def hat_Y_gaussian(sp):
    """q^(-x^2) Yhat q^(x^2) = q^(1/4) X^(-1) Yhat, componentwise:
    {X^(-1)Gamma^(-1)(f1-f2), X Gamma(f2) + q^(-1) X^(-1) Gamma(f1-f2)} * q^(1/4)."""
    d = sp.f1 - sp.f2
    first = d.act_gamma(-1).mul_monomial(-1)
    second = sp.f2.act_gamma(1).mul_monomial(1) \
        + d.act_gamma(1).mul_monomial(-1).smul(Scalar.q_pow(-1))
    return Spinor(first, second).smul(_Q_QUARTER)


HAT_OPS = {
    "Yhat": hat_Y, "Yhatprime": hat_Y_prime, "That": hat_T,
    "Thatprime": hat_T_prime, "pihat": hat_pi, "Xhat": hat_X,
    "Xhatprime": hat_X_prime, "Ltoda": qtoda_apply,
    "YhatGauss": hat_Y_gaussian,
}


def apply_hat(tag, sp):
    if tag not in HAT_OPS:
        raise ValueError("unknown hat operator %r" % tag)
    return HAT_OPS[tag](sp)


# ---------------------------------------------------------------------------
# relation checks
# ---------------------------------------------------------------------------

def _spinor_basis(max_deg):
    out = []
    for m in range(-max_deg, max_deg + 1):
        f = LaurentPoly.monomial("X", m)
        z = LaurentPoly.zero("X")
        out.append(Spinor(f, z))
        out.append(Spinor(z, f.copy()))
    return out


def nildaha_relations_check(max_deg=5):
    """Hat-side relations on the spinor monomial basis, plus the bar-side
    nil-DAHA relations on X-monomials; returns an itemized failure list."""
    fails = []
    for sp in _spinor_basis(max_deg):
        if not (hat_T_prime(sp) - hat_T(sp) - sp).is_zero():
            fails.append(("That' = That + 1", sp))
        if not hat_T(hat_T_prime(sp)).is_zero():
            fails.append(("That That' = 0", sp))
        if not hat_T_prime(hat_T(sp)).is_zero():
            fails.append(("That' That = 0", sp))
        if not hat_T_prime(hat_X_prime(sp)).is_zero():
            fails.append(("That' Xhat' = 0", sp))
        if not hat_X(hat_T(sp)).is_zero():
            fails.append(("Xhat That = 0", sp))
        if not (hat_Y(hat_Y_prime(sp)) - sp).is_zero():
            fails.append(("Yhat Yhat' = 1", sp))
        if not (hat_Y_prime(hat_Y(sp)) - sp).is_zero():
            fails.append(("Yhat' Yhat = 1", sp))
        if not (hat_pi(hat_pi(sp)) - sp).is_zero():
            fails.append(("pihat^2 = 1", sp))
        # That Yhat - Yhat^(-1) That = -Yhat
        lhs = hat_T(hat_Y(sp)) - hat_Y_prime(hat_T(sp))
        if not (lhs + hat_Y(sp)).is_zero():
            fails.append(("That Yhat - Yhat' That = -Yhat", sp))
        lhs = hat_T(hat_Y_prime(sp)) - hat_Y(hat_T(sp))
        if not (lhs - hat_Y(sp)).is_zero():
            fails.append(("That Yhat' - Yhat That = Yhat", sp))
        # That Xhat - Xhat' That = Xhat'; That Xhat' - Xhat That = -Xhat'
        lhs = hat_T(hat_X(sp)) - hat_X_prime(hat_T(sp))
        if not (lhs - hat_X_prime(sp)).is_zero():
            fails.append(("That Xhat - Xhat' That = Xhat'", sp))
        lhs = hat_T(hat_X_prime(sp)) - hat_X(hat_T(sp))
        if not (lhs + hat_X_prime(sp)).is_zero():
            fails.append(("That Xhat' - Xhat That = -Xhat'", sp))
        # Xhat + Xhat' = X^delta
        lhs = hat_X(sp) + hat_X_prime(sp)
        rhs = Spinor(sp.f1.mul_monomial(1), sp.f2.mul_monomial(1))
        if not (lhs - rhs).is_zero():
            fails.append(("Xhat + Xhat' = X^delta", sp))
        # q-Toda agreement on symmetric spinors and That-commutation
        lhs = hat_T(hat_Y(sp) + hat_Y_prime(sp))
        rhs = hat_Y(hat_T(sp)) + hat_Y_prime(hat_T(sp))
        if not (lhs - rhs).is_zero():
            fails.append(("That commutes with Yhat + Yhat'", sp))
    for m in range(-max_deg, max_deg + 1):
        f = daha1.x_mono(m)
        # bar side: Tbar(Tbar+1) = 0, pi relations of the nil-DAHA X-side
        if not daha1.op_Tbar(daha1.op_Tbar_prime(f)).is_zero():
            fails.append(("Tbar(Tbar+1) = 0", m))
        if daha1.op_pi(daha1.op_pi(f)) != f:
            fails.append(("pi+^2 = 1", m))
        lhs = daha1.op_pi(daha1.op_X(daha1.op_pi(f)))
        if lhs != daha1.op_X(f, -1).smul(Scalar.q_half(1)):
            fails.append(("pi+ X pi+ = q^(1/2) X^(-1)", m))
        lhs = daha1.op_Tbar(daha1.op_X(f)) - daha1.op_X(daha1.op_Tbar(f), -1)
        if lhs != daha1.op_X(f, -1):
            fails.append(("Tbar X - X^(-1) Tbar = X^(-1)", m))
    for sp in _spinor_basis(max_deg):
        sym = Spinor(sp.f1 + sp.f2, sp.f1 + sp.f2)
        if not (qtoda_apply(sym) - hat_Y(sym) - hat_Y_prime(sym)).is_zero():
            fails.append(("(Yhat + Yhat') = Ltoda on symmetric", sp))
    return fails


# ---------------------------------------------------------------------------
# spinor Whittaker function
# ---------------------------------------------------------------------------

class WhittakerSeries:
    """Omega truncated at X-degree N; components are dicts m -> Laurent in
    Lambda, with q^(x^2) q^(lambda^2) factored out."""

    __slots__ = ("order", "c1", "c2")

    def __init__(self, order, c1, c2):
        self.order = order
        self.c1 = c1
        self.c2 = c2

    def component(self, i, m):
        d = self.c1 if i == 1 else self.c2
        return d.get(m, LaurentPoly.zero("L"))

    def __eq__(self, other):
        return (self.order == other.order and self.c1 == other.c1
                and self.c2 == other.c2)


def _qherm(n):
    """Ebar_n in the Lambda variable."""
    return daha1.qhermite_bar(n).rename("L")


def _cm(m):
    """q^(m^2/4)/prod_{s=1}^m (1 - q^s)."""
    denom = SCALAR_ONE
    for s in range(1, m + 1):
        denom = denom * (SCALAR_ONE - Scalar.q_pow(s))
    return Scalar.u_pow(m * m) / denom


def whittaker_omega(N=6, presentation="pieri"):
    """The spinor Whittaker function through X-degree N.

    presentation "pieri": m-th pair {X^m Ebar_{-m}(L), X^m L^(-1) Ebar_{m+1}(L)}
    scaled by q^(m^2/4)/prod(1-q^s); presentation "raw": the defining sum of
    {X^m, q^m X^m} and {0, X^m} blocks.  The two agree by the bar-Pieri rules.
    """
    c1, c2 = {}, {}
    if presentation == "pieri":
        for m in range(0, N + 1):
            cm = _cm(m)
            c1[m] = _qherm(-m).smul(cm)
            c2[m] = _qherm(m + 1).mul_monomial(-1).smul(cm)
    elif presentation == "raw":
        c1[0] = LaurentPoly.one("L")
        c2[0] = LaurentPoly.one("L")
        for m in range(1, N + 1):
            cm = _cm(m)
            cm_short = _cm(m) * (SCALAR_ONE - Scalar.q_pow(m))
            c1[m] = _qherm(-m).smul(cm)
            c2[m] = _qherm(-m).smul(cm * Scalar.q_pow(m)) \
                + _qherm(m).smul(cm_short)
    else:
        raise ValueError("unknown presentation %r" % presentation)
    return WhittakerSeries(N, c1, c2)


def whittaker_symmetrized(N=6):
    """That'(Omega): the symmetric pair {W_q, W_q}; coefficient of X^m is
    q^(m^2/4) Pbar_m(L)/prod_{s=1}^m (1-q^s)."""
    om = whittaker_omega(N)
    return WhittakerSeries(N, dict(om.c1), dict(om.c1))


def _lambda_Ybar(lp):
    return daha1.op_Ybar(lp.rename("X")).rename("L")


def _lambda_Ybar_prime(lp):
    return daha1.op_Ybar_prime(lp.rename("X")).rename("L")


def _lambda_Tbar(lp):
    return daha1.op_Tbar(lp.rename("X")).rename("L")


def _lambda_pi(lp):
    return lp.rename("X").act_pi().rename("L")


def intertwine_check(N=6):
    """The five intertwining identities for Omega, checked through X-degree
    N-1 with every Gaussian handled by its conjugation rule.  Returns an
    itemized failure list with (identity, component, X-degree) slots."""
    om = whittaker_omega(N)
    fails = []
    top = N  # X-degrees 0..N-1 are fully correct after one operator

    def slot_compare(name, lhs1, lhs2, rhs1, rhs2):
        for m in range(0, top):
            if lhs1.get(m, LaurentPoly.zero("L")) != rhs1.get(m, LaurentPoly.zero("L")):
                fails.append((name, 1, m))
            if lhs2.get(m, LaurentPoly.zero("L")) != rhs2.get(m, LaurentPoly.zero("L")):
                fails.append((name, 2, m))

    zero = LaurentPoly.zero("L")

    # --- Yhat(Omega) = Lambda^(-1) Omega -----------------------------------
    # conjugated: q^(1/4){X^(-1)Gamma^(-1)(w1-w2), XGamma(w2)+q^(-1)X^(-1)Gamma(w1-w2)}
    lhs1, lhs2 = {}, {}
    for m in range(0, N + 1):
        d = om.component(1, m) - om.component(2, m)
        # X^(-1) Gamma^(-1): X^m -> q^(-m/2) X^(m-1)
        if m - 1 >= 0:
            lhs1[m - 1] = lhs1.get(m - 1, zero) \
                + d.smul(_Q_QUARTER * Scalar.q_half(-m))
            lhs2[m - 1] = lhs2.get(m - 1, zero) \
                + d.smul(_Q_QUARTER * Scalar.q_half(m) * Scalar.q_pow(-1))
        elif not d.is_zero():
            fails.append(("Yhat(Omega): negative X-degree", 0, m))
        lhs2[m + 1] = lhs2.get(m + 1, zero) \
            + om.component(2, m).smul(_Q_QUARTER * Scalar.q_half(m))
    rhs1 = {m: om.component(1, m).mul_monomial(-1) for m in range(N + 1)}
    rhs2 = {m: om.component(2, m).mul_monomial(-1) for m in range(N + 1)}
    slot_compare("Yhat(Omega) = Lambda^(-1) Omega", lhs1, lhs2, rhs1, rhs2)

    # --- Xhat(Omega) = Ybar'_Lambda(Omega) ----------------------------------
    lhs1 = {m + 1: om.component(1, m) for m in range(N + 1)}
    lhs2 = {}
    rhs1, rhs2 = {}, {}
    for m in range(N + 1):
        # q^(-la^2) Ybar' q^(la^2) = q^(-1/4) Ybar' o Lambda
        rhs1[m] = _lambda_Ybar_prime(om.component(1, m).mul_monomial(1)) \
            .smul(Scalar.u_pow(-1))
        rhs2[m] = _lambda_Ybar_prime(om.component(2, m).mul_monomial(1)) \
            .smul(Scalar.u_pow(-1))
    slot_compare("Xhat(Omega) = Ybar'_L(Omega)", lhs1, lhs2, rhs1, rhs2)

    # --- Xhat'(Omega) = Ybar_Lambda(Omega) ----------------------------------
    lhs1 = {}
    lhs2 = {m + 1: om.component(2, m) for m in range(N + 1)}
    rhs1, rhs2 = {}, {}
    for m in range(N + 1):
        # q^(-la^2) Ybar q^(la^2) = q^(1/4) Lambda^(-1) o Ybar
        rhs1[m] = _lambda_Ybar(om.component(1, m)).mul_monomial(-1) \
            .smul(_Q_QUARTER)
        rhs2[m] = _lambda_Ybar(om.component(2, m)).mul_monomial(-1) \
            .smul(_Q_QUARTER)
    slot_compare("Xhat'(Omega) = Ybar_L(Omega)", lhs1, lhs2, rhs1, rhs2)

    # --- pihat(Omega) = pi_Lambda(Omega) ------------------------------------
    lhs1, lhs2 = {}, {}
    for m in range(N + 1):
        d = om.component(1, m) - om.component(2, m)
        if m - 1 >= 0:
            lhs1[m - 1] = lhs1.get(m - 1, zero) + d
            lhs2[m - 1] = lhs2.get(m - 1, zero) + d
        elif not d.is_zero():
            fails.append(("pihat(Omega): negative X-degree", 0, m))
        lhs1[m + 1] = lhs1.get(m + 1, zero) + om.component(2, m)
    rhs1, rhs2 = {}, {}
    for m in range(N + 1):
        # q^(-la^2) pi_L q^(la^2) = q^(1/4) Lambda^(-1) pi_L
        rhs1[m] = _lambda_pi(om.component(1, m)).mul_monomial(-1) \
            .smul(_Q_QUARTER)
        rhs2[m] = _lambda_pi(om.component(2, m)).mul_monomial(-1) \
            .smul(_Q_QUARTER)
    slot_compare("pihat(Omega) = pi_L(Omega)", lhs1, lhs2, rhs1, rhs2)

    # --- That(Omega) = Tbar_Lambda(Omega) -----------------------------------
    lhs1 = {}
    lhs2 = {m: om.component(1, m) - om.component(2, m) for m in range(N + 1)}
    rhs1 = {m: _lambda_Tbar(om.component(1, m)) for m in range(N + 1)}
    rhs2 = {m: _lambda_Tbar(om.component(2, m)) for m in range(N + 1)}
    slot_compare("That(Omega) = Tbar_L(Omega)", lhs1, lhs2, rhs1, rhs2)

    return fails


def presentations_agree(N=6):
    return whittaker_omega(N, "pieri") == whittaker_omega(N, "raw")


def symmetrization_check(N=6):
    """That'(Omega) coefficient of X^m must be q^(m^2/4) Pbar_m / prod(1-q^s)."""
    sym = whittaker_symmetrized(N)
    for m in range(N + 1):
        expect = _qherm(-m).smul(_cm(m))
        if sym.component(1, m) != expect or sym.component(2, m) != expect:
            return False
    return True


# ---------------------------------------------------------------------------
# spinor polynomial representation
# ---------------------------------------------------------------------------

def spinor_polyrep_membership(sp):
    """Membership in X_spin = C{1,1} + sum_m (C{X^m,0} + C{0,X^m}), m >= 1."""
    for f in (sp.f1, sp.f2):
        if any(e < 0 for e in f.c):
            return False
    return sp.f1.coeff(0) == sp.f2.coeff(0)


def spinor_polyrep_invariance(max_deg=6):
    """That, pihat and the Gaussian-conjugated Yhat keep X_spin invariant."""
    basis = [Spinor(LaurentPoly.one("X"), LaurentPoly.one("X"))]
    for m in range(1, max_deg + 1):
        f = LaurentPoly.monomial("X", m)
        z = LaurentPoly.zero("X")
        basis.append(Spinor(f, z))
        basis.append(Spinor(z, f.copy()))
    for sp in basis:
        for op in (hat_T, hat_pi, hat_Y_gaussian):
            if not spinor_polyrep_membership(op(sp)):
                return False
    return True
