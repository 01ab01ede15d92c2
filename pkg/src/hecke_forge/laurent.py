"""Laurent polynomials and truncated q-series over the coefficient field.

A LaurentPoly is a finitely supported map exponent -> Scalar in one formal
variable (tag "X", "Y", "L" for Lambda) or, for the A2 Y-lattice, in two
(integer-pair exponents in the coweight basis).  The symmetry actions of
s, Gamma, pi, omega on X-polynomials follow the conventions
    s(X^n) = X^(-n),  Gamma(X^n) = q^(n/2) X^n,  pi(X^n) = q^(n/2) X^(-n),
    omega(X^n) = q^(-n/2) X^n,
so pi = omega o s and Gamma shifts x by +1/2 when X = q^x.
"""

from __future__ import annotations

from math import gcd as _igcd

from .scalars import Scalar, SCALAR_ONE, SCALAR_ZERO


class LaurentPoly:
    __slots__ = ("var", "c")

    def __init__(self, var, coeffs=None):
        self.var = var
        self.c = {}
        if coeffs:
            for e, s in coeffs.items():
                if not s.is_zero():
                    self.c[e] = s

    # -- constructors --------------------------------------------------------
    @classmethod
    def zero(cls, var):
        return cls(var)

    @classmethod
    def one(cls, var):
        return cls(var, {0: SCALAR_ONE})

    @classmethod
    def monomial(cls, var, e, s=SCALAR_ONE):
        return cls(var, {e: s})

    @classmethod
    def const(cls, var, s):
        return cls(var, {0: s})

    def copy(self):
        r = LaurentPoly(self.var)
        r.c = dict(self.c)
        return r

    # -- predicates -----------------------------------------------------------
    def is_zero(self):
        return not self.c

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.var == other.var and self.c == other.c

    def __hash__(self):
        return hash((self.var, frozenset(self.c.items())))

    def support(self):
        return sorted(self.c)

    def coeff(self, e):
        return self.c.get(e, SCALAR_ZERO)

    def degree_range(self):
        ks = self.support()
        return (ks[0], ks[-1]) if ks else (0, 0)

    # -- ring operations -------------------------------------------------------
    def _check(self, other):
        if self.var != other.var:
            raise ValueError("variable mismatch: %s vs %s" % (self.var, other.var))

    def __add__(self, other):
        self._check(other)
        r = LaurentPoly(self.var)
        r.c = dict(self.c)
        for e, s in other.c.items():
            t = r.c.get(e, SCALAR_ZERO) + s
            if t.is_zero():
                r.c.pop(e, None)
            else:
                r.c[e] = t
        return r

    def __neg__(self):
        r = LaurentPoly(self.var)
        r.c = {e: -s for e, s in self.c.items()}
        return r

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        r = LaurentPoly(self.var)
        acc = {}
        for e1, s1 in self.c.items():
            for e2, s2 in other.c.items():
                e = self._kadd(e1, e2)
                p = s1 * s2
                if e in acc:
                    acc[e] = acc[e] + p
                else:
                    acc[e] = p
        r.c = {e: s for e, s in acc.items() if not s.is_zero()}
        return r

    @staticmethod
    def _kadd(a, b):
        if isinstance(a, tuple):
            return tuple(x + y for x, y in zip(a, b))
        return a + b

    @staticmethod
    def _kneg(a):
        if isinstance(a, tuple):
            return tuple(-x for x in a)
        return -a

    def smul(self, s):
        if s.is_zero():
            return LaurentPoly(self.var)
        r = LaurentPoly(self.var)
        r.c = {e: s * t for e, t in self.c.items()}
        return r

    def mul_monomial(self, e, s=SCALAR_ONE):
        r = LaurentPoly(self.var)
        if s.is_zero():
            return r
        r.c = {self._kadd(e0, e): t * s for e0, t in self.c.items()}
        r.c = {e0: t for e0, t in r.c.items() if not t.is_zero()}
        return r

    def map_coeffs(self, fn):
        r = LaurentPoly(self.var)
        for e, s in self.c.items():
            t = fn(s)
            if not t.is_zero():
                r.c[e] = t
        return r

    def rename(self, var):
        r = LaurentPoly(var)
        r.c = dict(self.c)
        return r

    # -- symmetries (single-variable X/Y/L tags) -------------------------------
    def act_s(self):
        r = LaurentPoly(self.var)
        r.c = {self._kneg(e): s for e, s in self.c.items()}
        return r

    def act_gamma(self, power=1):
        """Gamma^power: X^n -> q^(n*power/2) X^n."""
        r = LaurentPoly(self.var)
        for e, s in self.c.items():
            r.c[e] = s * Scalar.q_half(power * e)
        return r

    def act_pi(self):
        """pi: X^n -> q^(n/2) X^(-n)."""
        r = LaurentPoly(self.var)
        for e, s in self.c.items():
            r.c[-e] = s * Scalar.q_half(e)
        return r

    def act_omega(self):
        """omega: X^n -> q^(-n/2) X^n (x -> x - 1/2)."""
        return self.act_gamma(-1)

    def scale_var(self, s, plus_minus=1):
        """X -> s*X (or s*X^(-1) in combination with act_s first)."""
        r = LaurentPoly(self.var)
        for e, t in self.c.items():
            r.c[e] = t * (s ** (e * plus_minus))
        return r

    def act_w(self, mat):
        """Lattice W-action on exponent tuples; mat rows are basis images."""
        r = LaurentPoly(self.var)
        for e, s in self.c.items():
            e2 = tuple(sum(mat[i][j] * e[i] for i in range(len(e)))
                       for j in range(len(e)))
            r.c[e2] = s
        return r

    # -- evaluation -------------------------------------------------------------
    def eval_scalar(self, val):
        """Substitute the variable by a Scalar (exact)."""
        acc = SCALAR_ZERO
        for e, s in self.c.items():
            acc = acc + s * (val ** e)
        return acc

    def eval_complex(self, x, q0, t0):
        acc = 0j
        for e, s in self.c.items():
            acc += s.specialize(q0, t0) * (x ** e)
        return acc

    # -- exact division -----------------------------------------------------------
    def divexact_one_minus(self, a, m=SCALAR_ONE):
        """Exact division by (1 - m*V^a); raises if not exact.

        a is an exponent key (int or tuple), m an invertible Scalar.  The
        support is cut into lines e, e+a, e+2a, ...; on each line, writing
        z = V^a, the quotient h of sum(c_j z^j) by (1 - m z) satisfies
        h_j = c_j + m*h_{j-1} ascending from the bottom of the line, and
        exactness means the top recursion closes with h_top = 0.
        """
        if self.is_zero():
            return LaurentPoly(self.var)
        lines = {}
        for e, s in self.c.items():
            lines.setdefault(self._line_id(e, a), {})[e] = s
        out = LaurentPoly(self.var)
        for _, terms in lines.items():
            e_at = {self._line_pos(e, a): e for e in terms}
            jmin, jmax = min(e_at), max(e_at)
            base = e_at[jmin]
            prev = SCALAR_ZERO
            for j in range(jmin, jmax + 1):
                cj = terms.get(e_at.get(j), SCALAR_ZERO) if j in e_at else SCALAR_ZERO
                h = cj + m * prev
                if j == jmax:
                    if not h.is_zero():
                        raise ArithmeticError(
                            "non-exact division by binomial in %s" % self.var)
                elif not h.is_zero():
                    out.c[self._kadd(base, self._kscale(a, j - jmin))] = h
                prev = h
        return out

    @staticmethod
    def _kscale(a, n):
        if isinstance(a, tuple):
            return tuple(n * x for x in a)
        return n * a

    @staticmethod
    def _line_id(e, a):
        if isinstance(a, tuple):
            return e[0] * a[1] - e[1] * a[0]
        return e % a if a else e

    @staticmethod
    def _line_pos(e, a):
        if isinstance(a, tuple):
            px, py = _bezout(a[0], a[1])
            g = a[0] * px + a[1] * py
            return (e[0] * px + e[1] * py) // g if g else 0
        return e // a

    # -- printing / serialization ---------------------------------------------
    def __repr__(self):
        if not self.c:
            return "0"
        parts = []
        for e in self.support():
            parts.append("(%r)*%s^%s" % (self.c[e], self.var, e))
        return " + ".join(parts)

    def serialize(self):
        lines = []
        for e in self.support():
            etxt = ",".join(str(x) for x in e) if isinstance(e, tuple) else str(e)
            lines.append("%s\t%s" % (etxt, self.c[e].serialize()))
        return "\n".join(lines)

    @classmethod
    def parse(cls, var, text):
        r = cls(var)
        for line in text.strip().splitlines():
            if not line.strip():
                continue
            etxt, stxt = line.split("\t")
            e = tuple(int(x) for x in etxt.split(",")) if "," in etxt else int(etxt)
            r.c[e] = Scalar.parse(stxt)
        return r


def _bezout(a, b):
    """x, y with a*x + b*y = gcd(a, b) > 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        qt = old_r // r
        old_r, r = r, old_r - qt * r
        old_s, s = s, old_s - qt * s
        old_t, t = t, old_t - qt * t
    if old_r < 0:
        old_s, old_t = -old_s, -old_t
    return old_s, old_t


def lp_gcd_reduce(num: LaurentPoly, den: LaurentPoly):
    """Reduce a fraction of univariate Laurent polynomials over the field.

    Euclidean gcd with Scalar (field) coefficients; returns (num', den')
    with den' monic in its leading term.
    """
    if num.is_zero():
        return num, LaurentPoly.one(den.var)

    def to_list(p):
        lo, hi = p.degree_range()
        return [p.coeff(e) for e in range(lo, hi + 1)], lo

    def from_list(ls, var):
        return LaurentPoly(var, {i: s for i, s in enumerate(ls)})

    an, _ = to_list(num)
    bn, _ = to_list(den)

    def deg(a):
        d = len(a) - 1
        while d >= 0 and a[d].is_zero():
            d -= 1
        return d

    def rem(a, b):
        a = list(a)
        db = deg(b)
        lb = b[db]
        while deg(a) >= db and deg(a) >= 0:
            da = deg(a)
            f = a[da] / lb
            for i in range(db + 1):
                a[da - db + i] = a[da - db + i] - f * b[i]
            a[da] = SCALAR_ZERO
        return a

    x, y = an, bn
    while deg(y) > 0:
        x, y = y, rem(x, y)
    if deg(y) == 0:
        g = [SCALAR_ONE]
    else:
        g = x
    dg = deg(g)
    if dg > 0:
        # divide both by g
        def divp(a, g):
            a = list(a)
            q = [SCALAR_ZERO] * (len(a))
            dgg = deg(g)
            lg = g[dgg]
            while deg(a) >= dgg and deg(a) >= 0:
                da = deg(a)
                f = a[da] / lg
                q[da - dgg] = f
                for i in range(dgg + 1):
                    a[da - dgg + i] = a[da - dgg + i] - f * g[i]
                a[da] = SCALAR_ZERO
            return q
        an2 = divp(an, g)
        bn2 = divp(bn, g)
        num2 = from_list(an2, num.var)
        den2 = from_list(bn2, den.var)
    else:
        num2, den2 = num.copy(), den.copy()
    # normalize: monic leading denominator, clear monomial
    lo_d, hi_d = den2.degree_range()
    lead = den2.coeff(hi_d)
    num2 = num2.smul(lead.inverse()).mul_monomial(-lo_d)
    den2 = den2.smul(lead.inverse()).mul_monomial(-lo_d)
    return num2, den2


class TruncSeries:
    """Formal series in u = q^(1/4) truncated at a fixed order.

    Coefficients are LaurentPoly in a fixed variable; pure-scalar series just
    use X^0 coefficients.  Powers of u up to and including `order` are kept.
    """

    __slots__ = ("var", "order", "c")

    def __init__(self, var, order, coeffs=None):
        self.var = var
        self.order = order
        self.c = {}
        if coeffs:
            for p, lp in coeffs.items():
                if p <= order and not lp.is_zero():
                    self.c[p] = lp

    @classmethod
    def one(cls, var, order):
        return cls(var, order, {0: LaurentPoly.one(var)})

    @classmethod
    def zero(cls, var, order):
        return cls(var, order)

    def coeff(self, p):
        return self.c.get(p, LaurentPoly.zero(self.var))

    def is_zero(self):
        return not self.c

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return (self.var == other.var and self.order == other.order
                and self.c == other.c)

    def __add__(self, other):
        n = min(self.order, other.order)
        r = TruncSeries(self.var, n)
        for p in set(self.c) | set(other.c):
            if p > n:
                continue
            s = self.coeff(p) + other.coeff(p)
            if not s.is_zero():
                r.c[p] = s
        return r

    def __neg__(self):
        r = TruncSeries(self.var, self.order)
        r.c = {p: -lp for p, lp in self.c.items()}
        return r

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        n = min(self.order, other.order)
        r = TruncSeries(self.var, n)
        acc = {}
        for p1, l1 in self.c.items():
            for p2, l2 in other.c.items():
                p = p1 + p2
                if p > n:
                    continue
                t = l1 * l2
                acc[p] = acc[p] + t if p in acc else t
        r.c = {p: lp for p, lp in acc.items() if not lp.is_zero()}
        return r

    def smul(self, s):
        r = TruncSeries(self.var, self.order)
        for p, lp in self.c.items():
            t = lp.smul(s)
            if not t.is_zero():
                r.c[p] = t
        return r

    def truncate(self, order):
        r = TruncSeries(self.var, order)
        r.c = {p: lp for p, lp in self.c.items() if p <= order}
        return r

    def mul_one_minus_inverse(self, upow, lp_factor):
        """Multiply by 1/(1 - f) where f = u^upow * lp_factor, upow > 0."""
        if upow <= 0:
            raise ValueError("series inversion needs positive u-power")
        out = TruncSeries(self.var, self.order)
        out.c = dict(self.c)
        term = self
        j = upow
        while j <= self.order:
            term = term.mul_term(upow, lp_factor)
            if term.is_zero():
                break
            out = out + term
            j += upow
        return out

    def mul_term(self, upow, lp_factor):
        """Multiply by the single term u^upow * lp_factor."""
        r = TruncSeries(self.var, self.order)
        for p, lp in self.c.items():
            if p + upow > self.order:
                continue
            t = lp * lp_factor
            if not t.is_zero():
                r.c[p + upow] = r.c.get(p + upow, LaurentPoly.zero(self.var)) + t
        r.c = {p: lp for p, lp in r.c.items() if not lp.is_zero()}
        return r

    def mul_one_plus_term(self, upow, lp_factor):
        """Multiply by (1 + u^upow * lp_factor)."""
        return self + self.mul_term(upow, lp_factor)

    def serialize(self):
        lines = ["order=%d" % self.order]
        for p in sorted(self.c):
            lines.append("power=%d" % p)
            lines.append(self.c[p].serialize())
        return "\n".join(lines)

    @classmethod
    def parse(cls, var, text):
        lines = text.strip().splitlines()
        order = int(lines[0].split("=")[1])
        r = cls(var, order)
        i = 1
        while i < len(lines):
            assert lines[i].startswith("power=")
            p = int(lines[i].split("=")[1])
            block = []
            i += 1
            while i < len(lines) and not lines[i].startswith("power="):
                block.append(lines[i])
                i += 1
            r.c[p] = LaurentPoly.parse(var, "\n".join(block))
        return r

    def __repr__(self):
        if not self.c:
            return "O(u^%d)" % (self.order + 1)
        parts = ["u^%d*(%r)" % (p, self.c[p]) for p in sorted(self.c)]
        return " + ".join(parts) + " + O(u^%d)" % (self.order + 1)
