"""Affine symmetrizers for A1: exact truncated forms, the rational closed
form, Jackson summation at levels 0 and 1, affine Hall functions, ct-series,
Kac-Moody limits, and the level-zero diamond form.

Symbolic normal forms live in the affine Hecke algebra <T, Y^(+-1)> written
as A(Y) + B(Y) T with Laurent-polynomial coefficients; the only rewrite is
    T f(Y) = f(Y^(-1)) T + (t^(1/2) - t^(-1/2)) (f(Y^(-1)) - f(Y))/(Y^(-2) - 1),
whose division is exact.  Numeric Jackson sums run over the extended affine
Weyl orbit of an origin q^xi with the tail monitored shell by shell.
"""

from __future__ import annotations

import cmath
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .scalars import Scalar, SCALAR_ONE, SCALAR_ZERO
from .laurent import LaurentPoly, TruncSeries, lp_gcd_reduce
from .rootsys import get_rs, AffWeylElt, lambda_set
from . import daha1

_T_HALF = Scalar.t_half(1)
_T_MINUS_HALF = Scalar.t_half(-1)
_T_DIFF = _T_HALF - _T_MINUS_HALF


def worker_count():
    env = os.environ.get("HECKE_FORGE_THREADS")
    if env:
        return max(1, int(env))
    return min(4, os.cpu_count() or 1)


# ---------------------------------------------------------------------------
# AHA normal form: A(Y) + B(Y) T
# ---------------------------------------------------------------------------

class AhaOpExpr:
    """Element of the rank-one AHA in the normal form A(Y) + B(Y) T."""

    __slots__ = ("a", "b")

    def __init__(self, a=None, b=None):
        self.a = a if a is not None else LaurentPoly.zero("Y")
        self.b = b if b is not None else LaurentPoly.zero("Y")

    @classmethod
    def one(cls):
        return cls(LaurentPoly.one("Y"), LaurentPoly.zero("Y"))

    @classmethod
    def from_y(cls, f):
        return cls(f.copy(), LaurentPoly.zero("Y"))

    @classmethod
    def T(cls):
        return cls(LaurentPoly.zero("Y"), LaurentPoly.one("Y"))

    @classmethod
    def T_inv(cls):
        # T^(-1) = T - (t^(1/2) - t^(-1/2))
        return cls(LaurentPoly.const("Y", -_T_DIFF), LaurentPoly.one("Y"))

    def __eq__(self, other):
        return self.a == other.a and self.b == other.b

    def __add__(self, other):
        return AhaOpExpr(self.a + other.a, self.b + other.b)

    def __sub__(self, other):
        return AhaOpExpr(self.a - other.a, self.b - other.b)

    def smul(self, s):
        return AhaOpExpr(self.a.smul(s), self.b.smul(s))

    def __repr__(self):
        return "(%r) + (%r) T" % (self.a, self.b)

    @staticmethod
    def _t_conj(f):
        """T f(Y) = f(Y^(-1)) T + (t^(1/2)-t^(-1/2))(f(Y^(-1)) - f(Y))/(Y^(-2)-1).

        Returns (g0, g1) with T o f = g0 + g1 T.
        """
        fs = f.act_s()
        diff = fs - f
        if diff.is_zero():
            return LaurentPoly.zero("Y"), fs
        quot = diff.divexact_one_minus(-2).smul(-_T_DIFF)
        return quot, fs

    def __mul__(self, other):
        # (a1 + b1 T)(a2 + b2 T)
        a, b = LaurentPoly.zero("Y"), LaurentPoly.zero("Y")
        a = a + self.a * other.a
        b = b + self.a * other.b
        if not self.b.is_zero():
            g0, g1 = self._t_conj(other.a)
            a = a + self.b * g0
            b = b + self.b * g1
            if not other.b.is_zero():
                h0, h1 = self._t_conj(other.b)
                # b1 (h0 + h1 T) T ; T^2 = 1 + (t^(1/2)-t^(-1/2)) T
                a = a + self.b * h1
                b = b + self.b * (h0 + h1.smul(_T_DIFF))
        return AhaOpExpr(a, b)

    def apply_poly(self, f, T_action, Y_action):
        """Apply in a representation given by callables for T and Y^(+-1)."""
        out = _apply_ypoly(self.a, f, Y_action)
        if not self.b.is_zero():
            tf = T_action(f)
            out = out + _apply_ypoly(self.b, tf, Y_action)
        return out


def _apply_ypoly(ypol, f, Y_action):
    acc = None
    for e, s in ypol.c.items():
        g = Y_action(f, e).smul(s)
        acc = g if acc is None else acc + g
    if acc is None:
        return f.smul(SCALAR_ZERO)
    return acc


def y_power_poly(j):
    return LaurentPoly.monomial("Y", j)


def trunc_Phat(M):
    """P'_M = (1 + t^(1/2)T)(sum_{j=1..M} t^(-j/2) Y^(-j)(1 + t^(-1/2)T^(-1)))
              + 1 + t^(-1/2) T^(-1), in normal form."""
    if M < 1:
        raise ValueError("M >= 1")
    plus = AhaOpExpr.one() + AhaOpExpr.T_inv().smul(_T_MINUS_HALF)
    mid = AhaOpExpr()
    for j in range(1, M + 1):
        mid = mid + AhaOpExpr.from_y(
            y_power_poly(-j).smul(Scalar.t_half(-j))) * plus
    lead = AhaOpExpr.one() + AhaOpExpr.T().smul(_T_HALF)
    return lead * mid + plus


def sigma_hat(M):
    """Sigma^+_M = (t^(-[M/2]) + sum_j t^(-[(M-j)/2]-j/2)(Y^j + Y^(-j)))
                   (1 + t^(-1/2) T^(-1))."""
    if M < 1:
        raise ValueError("M >= 1")
    core = LaurentPoly.const("Y", Scalar.t_half(-2 * (M // 2)))
    for j in range(1, M + 1):
        s = Scalar.t_half(-2 * ((M - j) // 2) - j)
        core = core + LaurentPoly("Y", {j: s, -j: s})
    plus = AhaOpExpr.one() + AhaOpExpr.T_inv().smul(_T_MINUS_HALF)
    return AhaOpExpr.from_y(core) * plus


def phat_equals_sigma(M):
    return trunc_Phat(M) == sigma_hat(M)


def phat_trunc_apply_one(M):
    """P'_M(1) as a Scalar: Y(1) = t^(1/2), T(1) = t^(1/2)."""
    op = trunc_Phat(M)
    acc = SCALAR_ZERO
    for e, s in op.a.c.items():
        acc = acc + s * Scalar.t_half(e)
    for e, s in op.b.c.items():
        acc = acc + s * Scalar.t_half(e) * _T_HALF
    return acc


# ---------------------------------------------------------------------------
# the rational P-hat and the diamond form (E-basis route)
# ---------------------------------------------------------------------------

def expand_in_e_basis(f):
    """Coefficients of f in the E-polynomial basis by triangular elimination
    along the filtration X^0, X^1, X^(-1), X^2, X^(-2), ..."""
    order = [0]
    lo, hi = f.degree_range()
    bound = max(abs(lo), abs(hi))
    for n in range(1, bound + 1):
        order.extend((n, -n))
    coeffs = {}
    rem = f.copy()
    for n in reversed(order):
        c = rem.coeff(n)
        if not c.is_zero():
            coeffs[n] = c
            rem = rem - daha1.epoly(n).smul(c)
    if not rem.is_zero():
        raise ArithmeticError("E-basis expansion failed to terminate")
    return coeffs


def phat_rational_apply(f):
    """The closed-form affine symmetrizer applied to an X-Laurent polynomial:
    P' = (1 + t^(1/2)T)(U(Y)(1 + t^(-1/2)T^(-1)) + t^(-1/2)T^(-1)) with
    U(Y) = t^(-1/2)Y^(-1)/(1 - t^(-1/2)Y^(-1)) acting diagonally in the
    E-basis."""
    g = f + daha1.op_T_inv(f).smul(_T_MINUS_HALF)
    coeffs = expand_in_e_basis(g)
    acc = LaurentPoly.zero("X")
    for n, c in coeffs.items():
        lam_inv = daha1.y_eigenvalue(n).inverse()  # Y^(-1) eigenvalue q^{n_#}
        u = _T_MINUS_HALF * lam_inv
        den = SCALAR_ONE - u
        if den.is_zero():
            raise ZeroDivisionError("vanishing denominator eigenvalue "
                                    "(t^2 in q^(-1-Z_+))")
        acc = acc + daha1.epoly(n).smul(c * u / den)
    acc = acc + daha1.op_T_inv(f).smul(_T_MINUS_HALF)
    return acc + daha1.op_T(acc).smul(_T_HALF)


def affine_poincare_via_rational(kind="A1"):
    """P'_+(1) from the closed rational formula.

    A1 instance of the general subset-sum formula; for A2 the displayed
    two-subset expression with P(t) = (1+t)(1+t+t^2), evaluated on 1 (all
    Y-eigenvalues become t-powers).
    """
    one = SCALAR_ONE
    t = Scalar.t_pow(1)
    if kind == "A1":
        return phat_rational_apply(daha1.X_ONE).coeff(0)
    if kind != "A2":
        raise ValueError(kind)
    # t^(-1) Y_{omega_i}^(-1) (1) = t^(-2); P_+(1) = 1
    u = Scalar.t_pow(-2)
    pt = (one + t) * (one + t + Scalar.t_pow(2))
    ptinv = (one + t.inverse()) * (one + t.inverse() + Scalar.t_pow(-2))
    term2 = (u / (one - u)) * Scalar.integer(2) / (one + t)
    term3 = one / pt
    inner = (u * u / ((one - u) * (one - u))) + term2 + term3
    return pt * ptinv * inner


def diamond_form(f, g):
    """<f, g> = t^(-1/2) P_+(f T(g)) normalized so <1, 1> = 1 (rank one,
    where w0 = s and varsigma is trivial on exponents)."""
    val = phat_rational_apply(f * daha1.op_T(g)).coeff(0) * _T_MINUS_HALF
    norm = affine_poincare_via_rational("A1")
    return val / norm


# ---------------------------------------------------------------------------
# operator expansion over the affine Weyl group (for SIMINV and probes)
# ---------------------------------------------------------------------------

class FactoredRat:
    """num / prod (1 - q^(a/4) X^b)^mult with the denominator kept factored.

    The denominator factors arising from T and its affine-Weyl conjugates are
    always of this shape, so addition is a least-common-multiple of factor
    dicts and no polynomial gcd is ever needed.  Factor keys are (a, b) with
    a counting quarter-powers of q.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        self.num = num
        self.den = {}
        if not num.is_zero() and den:
            for key, mult in den.items():
                if not mult:
                    continue
                a, b = key
                if a < 0 or (a == 0 and b < 0):
                    # 1/(1 - u^a X^b) = -u^(-a) X^(-b) / (1 - u^(-a) X^(-b))
                    key = (-a, -b)
                    unit = LaurentPoly("X", {-b: -Scalar.u_pow(-a)})
                    for _ in range(mult):
                        self.num = self.num * unit
                self.den[key] = self.den.get(key, 0) + mult

    def is_zero(self):
        return self.num.is_zero()

    @staticmethod
    def _factor_poly(key):
        a, b = key
        return LaurentPoly("X", {0: SCALAR_ONE,
                                 b: -Scalar.u_pow(a)})

    def _extend_to(self, den):
        """Numerator multiplied up to the denominator `den` (a superset)."""
        num = self.num
        for key, mult in den.items():
            extra = mult - self.den.get(key, 0)
            for _ in range(extra):
                num = num * self._factor_poly(key)
        return num

    def __add__(self, other):
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        den = dict(self.den)
        for key, mult in other.den.items():
            den[key] = max(den.get(key, 0), mult)
        num = self._extend_to(den) + other._extend_to(den)
        if num.is_zero():
            return FactoredRat(num)
        return FactoredRat(num, den)

    def __neg__(self):
        return FactoredRat(-self.num, self.den)

    def __mul__(self, other):
        den = dict(self.den)
        for key, mult in other.den.items():
            den[key] = den.get(key, 0) + mult
        return FactoredRat(self.num * other.num, den)

    def smul(self, s):
        return FactoredRat(self.num.smul(s), self.den)

    def act_w(self, w):
        """Image under w = (m, eps): X^n -> q^(-mn/2) X^n or q^(mn/2) X^(-n);
        factors stay in the family."""
        m, e = w
        num = LaurentPoly("X")
        for n, s in self.num.c.items():
            if e:
                num.c[-n] = s * Scalar.q_half(m * n)
            else:
                num.c[n] = s * Scalar.q_half(-m * n)
        den = {}
        for (a, b), mult in self.den.items():
            if e:
                key = (a + 2 * m * b, -b)
            else:
                key = (a - 2 * m * b, b)
            den[key] = den.get(key, 0) + mult
        return FactoredRat(num, den)

    def u_valuation(self):
        """q-valuation in quarter powers; denominator factors with a > 0 have
        valuation zero, and a factor with a = 0 is (1 - X^b), also of
        valuation zero, so only the numerator contributes."""
        if self.is_zero():
            return None
        if any(a < 0 for (a, b) in self.den):
            raise ArithmeticError("denominator factor with negative q-power")
        return min(s.u_valuation() for s in self.num.c.values())


class XWOperator:
    """Finite sum C_w(X) w over extended affine Weyl elements, rank one.

    Elements w are encoded (m, eps): translation by m*omega composed with
    s^eps; the action on X-monomials is
        (m, 0): X -> q^(-m/2) X,   (m, 1): X -> q^(m/2) X^(-1).
    Coefficients are FactoredRat fractions.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = terms or {}

    @classmethod
    def identity(cls):
        return cls({(0, 0): FactoredRat(LaurentPoly.one("X"))})

    @staticmethod
    def _w_mul(w1, w2):
        m1, e1 = w1
        m2, e2 = w2
        return (m1 + (m2 if e1 == 0 else -m2), e1 ^ e2)

    def add_term(self, w, fr):
        if fr.is_zero():
            return
        if w in self.terms:
            s = self.terms[w] + fr
            if s.is_zero():
                del self.terms[w]
            else:
                self.terms[w] = s
        else:
            self.terms[w] = fr

    def __add__(self, other):
        out = XWOperator(dict(self.terms))
        for w, fr in other.terms.items():
            out.add_term(w, fr)
        return out

    def __sub__(self, other):
        out = XWOperator(dict(self.terms))
        for w, fr in other.terms.items():
            out.add_term(w, -fr)
        return out

    def smul(self, s):
        return XWOperator({w: fr.smul(s) for w, fr in self.terms.items()})

    def __mul__(self, other):
        out = XWOperator()
        for w1, f1 in self.terms.items():
            for w2, f2 in other.terms.items():
                w = self._w_mul(w1, w2)
                out.add_term(w, f1 * f2.act_w(w1))
        return out


def xw_T():
    """T = t^(1/2) s + (t^(1/2)-t^(-1/2))/(X^2-1) (s - 1) as an XWOperator.

    1/(X^2-1) = -1/(1-X^2), so both coefficients carry the factor key (0, 2).
    """
    den = {(0, 2): 1}
    # s-coefficient: t^(1/2) - (t^(1/2)-t^(-1/2))/(1-X^2)
    num_s = LaurentPoly("X", {0: _T_HALF - _T_DIFF, 2: -_T_HALF})
    op = XWOperator()
    op.add_term((0, 1), FactoredRat(num_s, den))
    op.add_term((0, 0), FactoredRat(LaurentPoly.const("X", _T_DIFF), den))
    return op


def xw_pi():
    return XWOperator({(1, 1): FactoredRat(LaurentPoly.one("X"))})


def xw_Y(power=1):
    y = xw_pi() * xw_T()
    if power == 1:
        return y
    t_inv = xw_T() - XWOperator.identity().smul(_T_DIFF)
    yinv = t_inv * xw_pi()
    out = XWOperator.identity()
    base = y if power > 0 else yinv
    for _ in range(abs(power)):
        out = out * base
    return out


def siminv_defect_valuations(M):
    """Minimal q-valuations of the w-coefficients of
    t^(-1/2) Y Sigma^+_M - Sigma^+_M in the polynomial representation.

    Returns {(n, eps): (valuation_quarters, required_quarters)}; the theorem
    puts the coefficient at translation n in the ideal q^((M-n)/2) X.
    """
    sig = sigma_hat(M)
    # realize as XWOperator
    op = XWOperator()
    t_op = xw_T()
    for e, s in sig.a.c.items():
        op = op + xw_Y(e).smul(s)
    bop = XWOperator()
    for e, s in sig.b.c.items():
        bop = bop + xw_Y(e).smul(s)
    op = op + bop * t_op
    defect = xw_Y(1).smul(_T_MINUS_HALF) * op - op
    out = {}
    for (n, eps), fr in defect.terms.items():
        if abs(n) > M:
            continue
        out[(n, eps)] = (fr.u_valuation(), 2 * (M - abs(n)))
    return out


# ---------------------------------------------------------------------------
# numeric layer: Jackson sums, Hall functions, probes
# ---------------------------------------------------------------------------

@dataclass
class JacksonConfig:
    q0: complex
    t0: complex
    xi: complex
    cutoff: int = 40
    tol: float = 1e-9
    product_tol: float = 1e-16

    def __post_init__(self):
        if abs(self.q0) >= 1:
            raise ValueError("|q0| must be < 1")


@dataclass
class JacksonResult:
    value: complex
    tail_estimate: float
    shells_used: int

    def as_dict(self):
        return {"value": [self.value.real, self.value.imag],
                "tail_estimate": self.tail_estimate,
                "shells_used": self.shells_used}


def mu_tilde_value(x_exp, cfg):
    """mutilde at the point X = q^x_exp: product over positive affine roots
    (1 - t^(-1) X_a q^j)/(1 - X_a q^j), truncated when q^j is negligible."""
    q, t = cfg.q0, cfg.t0
    tinv = 1.0 / t
    big_x = cmath.exp(cmath.log(q) * 2 * x_exp)  # X_alpha = X^2 = q^(2x)
    val = (1 - tinv * big_x) / (1 - big_x)
    j = 1
    qj = q
    while abs(qj) > cfg.product_tol:
        for xa in (big_x, 1.0 / big_x):
            val *= (1 - tinv * qj * xa) / (1 - qj * xa)
        qj *= q
        j += 1
    return val


def ct_inv_value(cfg):
    """ct(t^(-1)) numerically: prod_i (1-t^(-1)q^i)^2/((1-t^(-2)q^i)(1-q^i))."""
    q, t = cfg.q0, cfg.t0
    tinv = 1.0 / t
    val = 1.0 + 0j
    qi = q
    while abs(qi) > cfg.product_tol:
        val *= (1 - tinv * qi) ** 2 / ((1 - tinv * tinv * qi) * (1 - qi))
        qi *= q
    return val


def gaussian_theta(cfg, level=1):
    """The theta factor sum_{n in Z} q^(l n^2/4 + n xi), so that
    gamma(q^xi) = q^(l xi^2) * gaussian_theta (X_b(q^xi) = q^(n xi))."""
    q = cfg.q0
    total = 0j
    n = 0
    while True:
        term = 0j
        for m in ((n, -n) if n else (0,)):
            term += cmath.exp(cmath.log(q) * (level * m * m / 4.0
                                              + m * cfg.xi))
        total += term
        if n > 4 and abs(term) < cfg.product_tol * max(1.0, abs(total)):
            break
        n += 1
    return total


def jackson_sum(F, cfg, level=0):
    """Sum over the affine Weyl orbit of q^xi of mutilde * F * Gaussian^level.

    F is a callable of the x-exponent (X = q^x).  Points are w(xi) + m/2 in
    the x_omega coordinate, m the translation index over |m| <= cutoff.
    Shells grouped by |m| are accumulated until two consecutive shells fall
    below tol relative to the partial sum.
    """
    logq = cmath.log(cfg.q0)

    def point_value(x):
        val = mu_tilde_value(x, cfg) * F(x)
        if level:
            val *= cmath.exp(logq * (level * x * x))
        return val

    def shell(m):
        # translation by m*omega shifts x_omega by m/2; w in {1, s}
        total = 0j
        for sgn in (1, -1):
            x = sgn * cfg.xi + m / 2.0
            total += point_value(x)
        return total

    total = shell(0)
    shells = 1
    small = 0
    ms = list(range(1, cfg.cutoff + 1))
    tail = 0.0
    with ThreadPoolExecutor(max_workers=worker_count()) as pool:
        for m, val_pair in zip(ms, pool.map(
                lambda m: (shell(m), shell(-m)), ms)):
            contrib = val_pair[0] + val_pair[1]
            total += contrib
            shells += 2
            tail = abs(contrib)
            if tail < cfg.tol * max(1.0, abs(total)):
                small += 1
                if small >= 2:
                    return JacksonResult(total, tail, shells)
            else:
                small = 0
    if tail >= cfg.tol * max(1.0, abs(total)):
        raise ArithmeticError(
            "not converged; increase M or adjust k (tail %.3g)" % tail)
    return JacksonResult(total, tail, shells)


def epoly_numeric(n, cfg):
    """E_n as a numeric function of the x-exponent."""
    e = daha1.epoly(n)
    coeffs = [(exp, s.specialize(cfg.q0, cfg.t0)) for exp, s in e.c.items()]
    logq = cmath.log(cfg.q0)

    def f(x):
        xval = cmath.exp(logq * x)
        return sum(c * xval ** exp for exp, c in coeffs)
    return f


def hall_function(a, cfg, level=1):
    """H_a^(l) = J(X_a q^(l x^2/2)) evaluated at the origin q^xi."""
    logq = cmath.log(cfg.q0)

    def F(x):
        return cmath.exp(logq * (a * x))
    return jackson_sum(F, cfg, level)


def level_one_constant(cfg):
    """(1 + t^(-1)) prod_{i>=1} (1 - t^(-1) q^i)/(1 - q^i): the combined
    proportionality constant ct(t^(-1)) * prod_{j>=0}(1-t^(-2)q^j)/(1-t^(-1)q^j)
    with the matching factors cancelled so the t = q zero is explicit."""
    q, t = cfg.q0, cfg.t0
    tinv = 1.0 / t
    val = 1.0 + tinv
    qi = q
    while abs(qi) > cfg.product_tol:
        val *= (1 - tinv * qi) / (1 - qi)
        qi *= q
    return val


def level_one_rhs(a, cfg):
    """RHS of the level-one Hall identity for index a (A1):
    E_a(t^(-1/2)) q^(-a^2/2 - k(a_+,rho)) prod_{j>=0}(1-t^(-2)q^j)/(1-t^(-1)q^j)
    times gamma(q^xi)."""
    ev = daha1.evaluation_product(a).specialize(cfg.q0, cfg.t0)
    # with a = n*omega: a^2/2 = n^2/4 and q^(-k(a_+,rho)) = t^(-|n|/2)
    n = a
    logq = cmath.log(cfg.q0)
    pref = cmath.exp(-logq * (n * n / 4.0)) * cfg.t0 ** (-abs(n) / 2.0)
    q, t = cfg.q0, cfg.t0
    tinv = 1.0 / t
    prod = 1.0 + 0j
    qj = 1.0 + 0j
    while abs(qj) > cfg.product_tol:
        prod *= (1 - tinv * tinv * qj) / (1 - tinv * qj)
        qj = q if qj == 1.0 else qj * q
    gamma_val = cmath.exp(logq * cfg.xi * cfg.xi) * gaussian_theta(cfg, 1)
    return ev * pref * prod * gamma_val


# ---------------------------------------------------------------------------
# ct as a truncated series and the Kac-Moody limit identities
# ---------------------------------------------------------------------------

def ct_series(norder, kind="A1", inverted=True):
    """The constant-term series of mu in q up to q^norder (u-order 4*norder).

    With inverted=True the variant ct(t^(-1)) used throughout the paper.
    Coefficients are X^0 Laurent polynomials whose scalars are rational in t.
    """
    rs = get_rs(kind)
    order = 4 * norder
    out = TruncSeries.one("X", order)
    for alpha in rs.pos_roots:
        h = int(rs.pair(alpha, rs.rho))  # (alpha, rho^vee)
        sgn = -1 if inverted else 1
        for i in range(1, norder + 1):
            tpow = LaurentPoly.const("X", Scalar.t_pow(sgn * h))
            out = out.mul_one_plus_term(4 * i, tpow.smul(-SCALAR_ONE))
            out = out.mul_one_plus_term(4 * i, tpow.smul(-SCALAR_ONE))
            up = LaurentPoly.const("X", Scalar.t_pow(sgn * (h + 1)))
            dn = LaurentPoly.const("X", Scalar.t_pow(sgn * (h - 1)))
            out = out.mul_one_minus_inverse(4 * i, up)
            out = out.mul_one_minus_inverse(4 * i, dn)
    return out


def ct_series_tinf_limit(norder):
    """t -> infinity limit of ct(t^(-1)): prod 1/(1-q^i)^n as a series."""
    out = ct_series(norder, "A1", inverted=True)
    res = TruncSeries("X", out.order)
    for p, lp in out.c.items():
        res.c[p] = lp.map_coeffs(lambda s: s.limit_tinf())
    res.c = {p: lp for p, lp in res.c.items() if not lp.is_zero()}
    return res


def km_numerator(level, norder):
    """sum_{w-hat} (-1)^l X^(-1)_{w(rho-hat) - rho-hat + l b} q^(l b^2/2)
    truncated at q^norder, as a series in u with X-Laurent coefficients."""
    rs = get_rs("A1")
    order = 4 * norder
    out = TruncSeries.zero("X", order)
    bound = 2 * norder + 6
    for m in range(-bound, bound + 1):
        for w in rs.weyl:
            el = AffWeylElt(rs, (m,), w)
            ls = lambda_set(el.inv())
            l = len(ls)
            # X_{rho-hat - w(rho-hat)} = X_{sum Lambda(w^-1)}: [z, j] -> X_z q^j
            zsum = sum(r[0][0] for r in ls)
            jsum = sum(r[1] for r in ls)
            # times X_{-lb} q^(l b^2/2): b = m omega, X_{-b} = X^(-m)
            xexp = zsum - level * m
            upow = 4 * jsum + level * m * m
            if upow > order or upow < 0:
                continue
            sgn = SCALAR_ONE if l % 2 == 0 else -SCALAR_ONE
            term = TruncSeries("X", order,
                               {upow: LaurentPoly.monomial("X", xexp, sgn)})
            out = out + term
    return out


def affine_root_product_series(norder, level_shift=0):
    """prod_{affine alpha > 0} (1 - X_alpha) as a truncated series:
    (1 - X^2) prod_{j>=1} (1 - q^j X^2)(1 - q^j X^(-2))."""
    order = 4 * norder
    out = TruncSeries.one("X", order)
    out = out.mul_one_plus_term(0, LaurentPoly.monomial("X", 2, -SCALAR_ONE))
    for j in range(1, norder + 1):
        out = out.mul_one_plus_term(4 * j,
                                    LaurentPoly.monomial("X", 2, -SCALAR_ONE))
        out = out.mul_one_plus_term(4 * j,
                                    LaurentPoly.monomial("X", -2, -SCALAR_ONE))
    return out


def qpochhammer_series(norder, power=1):
    """prod_{j>=1} (1-q^j)^power as a scalar-coefficient series."""
    order = 4 * norder
    out = TruncSeries.one("X", order)
    for j in range(1, norder + 1):
        for _ in range(power):
            out = out.mul_one_plus_term(4 * j,
                                        LaurentPoly.const("X", -SCALAR_ONE))
    return out


def theta_series(norder):
    """sum_{b in P} X_b q^(b^2/2) = sum_n X^n q^(n^2/4) truncated."""
    order = 4 * norder
    out = TruncSeries.zero("X", order)
    n = 0
    while n * n <= order:
        for m in ((n, -n) if n else (0,)):
            cur = out.c.get(m * m, LaurentPoly.zero("X"))
            out.c[m * m] = cur + LaurentPoly.monomial("X", m)
        n += 1
    return out


def denominator_identity_check(norder=4):
    """(thetaprod): prod(1 - X_alpha) = KM numerator(l=0)/(|Pi| (q)_inf^n)."""
    lhs = affine_root_product_series(norder)
    rhs_num = km_numerator(0, norder)
    # lhs * |Pi| * prod(1-q^j) must equal the numerator
    check = lhs * qpochhammer_series(norder)
    check = TruncSeries("X", check.order,
                        {p: lp.smul(Scalar.integer(2)) for p, lp in check.c.items()})
    return check == rhs_num


def level_one_identity_check(norder=4):
    """(thetaprodone): prod(1 - X_alpha) = KM numerator(l=1)/theta."""
    lhs = affine_root_product_series(norder)
    rhs_num = km_numerator(1, norder)
    return lhs * theta_series(norder) == rhs_num


# ---------------------------------------------------------------------------
# numeric coefficient probe (delta representation on the orbit)
# ---------------------------------------------------------------------------

class OrbitFunction:
    """Function on the affine Weyl orbit of xi: keys (m, eps) label the point
    x = eps*xi + m/2 (eps = +-1)."""

    __slots__ = ("vals",)

    def __init__(self, vals=None):
        self.vals = vals or {}

    @classmethod
    def delta(cls, key):
        return cls({key: 1.0 + 0j})

    def x_of(self, key, xi):
        m, eps = key
        return eps * xi + m / 2.0


def _orbit_apply_s(f):
    # s: x -> -x: point (m, eps) maps from (-m? ...): (s f)(x) = f(-x)
    out = {}
    for (m, eps), v in f.vals.items():
        out[(-m, -eps)] = out.get((-m, -eps), 0j) + v
    return OrbitFunction(out)


def _orbit_apply_translate(f, j):
    # (translation by j*omega acting as operator): (b f)(x) = f(x - j/2)
    out = {}
    for (m, eps), v in f.vals.items():
        out[(m + j, eps)] = out.get((m + j, eps), 0j) + v
    return OrbitFunction(out)


def _orbit_apply_pi(f):
    # pi = omega s: (pi f)(x) = f(1/2 - x)
    return _orbit_apply_translate(_orbit_apply_s(f), 1)


def _orbit_mul_fn(f, fn, cfg):
    out = {}
    for key, v in f.vals.items():
        x = key[1] * cfg.xi + key[0] / 2.0
        out[key] = v * fn(x)
    return OrbitFunction(out)


def _orbit_apply_T(f, cfg):
    logq = cmath.log(cfg.q0)
    th = cfg.t0 ** 0.5
    tmh = 1.0 / th

    def cs(x):
        x2 = cmath.exp(logq * 2 * x)
        return th + (th - tmh) / (x2 - 1)

    def cid(x):
        x2 = cmath.exp(logq * 2 * x)
        return -(th - tmh) / (x2 - 1)
    sf = _orbit_apply_s(f)
    out = {}
    for key, v in _orbit_mul_fn(sf, cs, cfg).vals.items():
        out[key] = out.get(key, 0j) + v
    for key, v in _orbit_mul_fn(f, cid, cfg).vals.items():
        out[key] = out.get(key, 0j) + v
    return OrbitFunction(out)


def _orbit_apply_T_inv(f, cfg):
    th = cfg.t0 ** 0.5
    tmh = 1.0 / th
    tf = _orbit_apply_T(f, cfg)
    out = dict(tf.vals)
    for key, v in f.vals.items():
        out[key] = out.get(key, 0j) - (th - tmh) * v
    return OrbitFunction(out)


def _orbit_apply_Yinv(f, cfg, power=1):
    # Y^(-1) = T^(-1) pi
    out = f
    for _ in range(power):
        out = _orbit_apply_T_inv(_orbit_apply_pi(out), cfg)
    return out


def phat_trunc_delta_coeff(w_key, cfg, M=30):
    """F_w of the truncated P'_M via a delta function at w^(-1)(xi).

    w_key = (n, eps) encodes w = translation(n) o s^eps; returns the
    coefficient value at the origin point xi."""
    n, eps = w_key
    # w = t_n s^eps acting on points: w(x) = x + n/2 (eps 0), -x + n/2 (eps 1);
    # so w^(-1)(xi) is the point (-n, +1) resp. (n, -1)
    pt = (-n, 1) if eps == 0 else (n, -1)
    f = OrbitFunction.delta(pt)
    th = cfg.t0 ** 0.5
    tmh = 1.0 / th
    # P'_M = (1+t^(1/2)T)(sum_j t^(-j/2)Y^(-j)(1+t^(-1/2)T^(-1))) + 1 + t^(-1/2)T^(-1)
    plus = OrbitFunction(dict(f.vals))
    ti = _orbit_apply_T_inv(f, cfg)
    for key, v in ti.vals.items():
        plus.vals[key] = plus.vals.get(key, 0j) + tmh * v
    acc = OrbitFunction()
    cur = plus
    for j in range(1, M + 1):
        cur = _orbit_apply_Yinv(cur, cfg, 1)
        for key, v in cur.vals.items():
            acc.vals[key] = acc.vals.get(key, 0j) + (tmh ** j) * v
    res = OrbitFunction(dict(acc.vals))
    tacc = _orbit_apply_T(acc, cfg)
    for key, v in tacc.vals.items():
        res.vals[key] = res.vals.get(key, 0j) + th * v
    for key, v in plus.vals.items():
        res.vals[key] = res.vals.get(key, 0j) + v
    return res.vals.get((0, 1), 0j)


def coefficient_probe(w_key, cfg, M=30):
    """Ratio F_w(P'_M) / [ct(t^(-1)) w-coefficient of S' o mutilde]; the
    expected value is 1."""
    num = phat_trunc_delta_coeff(w_key, cfg, M)
    n, eps = w_key
    x = (cfg.xi - n / 2.0) if eps == 0 else (-cfg.xi + n / 2.0)
    den = ct_inv_value(cfg) * mu_tilde_value(x, cfg)
    return num / den
