"""Exact coefficient arithmetic for the whole engine.

The coefficient field is the field of rational functions in two formal
variables with integer coefficients.  The main instance is ``Scalar``,
rational functions in u = q^(1/4) and v = t^(1/2); every q- or t-power
appearing anywhere in the engine is an integer power of u or v, which keeps
all exponent bookkeeping in plain ints.  A second instance, ``KXFrac``
(variables k and X), carries the coefficients of the differential-theory
operators.

Polynomials are dicts mapping exponent pairs (a, b) to nonzero ints.
Fractions are kept reduced (primitive, gcd(num, den) trivial, leading
denominator coefficient positive), so equality is plain dict comparison.
"""

from __future__ import annotations

from math import gcd as _igcd


# ---------------------------------------------------------------------------
# univariate integer polynomials: dict degree -> nonzero int
# ---------------------------------------------------------------------------

def p1_is_zero(a):
    return not a


def p1_add(a, b):
    r = dict(a)
    for e, c in b.items():
        s = r.get(e, 0) + c
        if s:
            r[e] = s
        else:
            r.pop(e, None)
    return r


def p1_neg(a):
    return {e: -c for e, c in a.items()}

def p1_mul(a, b):
    if not a or not b:
        return {}
    if len(a) == 1:
        (ea, ca), = a.items()
        return {ea + e: ca * c for e, c in b.items()}
    if len(b) == 1:
        (eb, cb), = b.items()
        return {eb + e: cb * c for e, c in a.items()}
    r = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = ea + eb
            s = r.get(e, 0) + ca * cb
            if s:
                r[e] = s
            else:
                del r[e]
    return r


def p1_content(a):
    g = 0
    for c in a.values():
        g = _igcd(g, abs(c))
        if g == 1:
            return 1
    return g


def p1_scale(a, k):
    if k == 1:
        return dict(a)
    return {e: c * k for e, c in a.items()}


def p1_divexact_int(a, k):
    if k == 1:
        return dict(a)
    return {e: c // k for e, c in a.items()}


def p1_deg(a):
    return max(a) if a else -1


def p1_lc(a):
    return a[max(a)] if a else 0


def p1_shift(a, n):
    return {e + n: c for e, c in a.items()}


def p1_pseudo_divmod(a, b):
    """Pseudo-division over Z: lc(b)^(da-db+1) * a = q*b + r."""
    da, db = p1_deg(a), p1_deg(b)
    if db < 0:
        raise ZeroDivisionError("division by zero polynomial")
    q = {}
    r = dict(a)
    lb = p1_lc(b)
    while not p1_is_zero(r) and p1_deg(r) >= db:
        dr = p1_deg(r)
        lr = r[dr]
        q = p1_add(p1_scale(q, lb), {dr - db: lr})
        r = p1_add(p1_scale(r, lb), p1_neg(p1_mul({dr - db: lr}, b)))
    return q, r


def p1_eval_int(a, x):
    return sum(c * x ** e for e, c in a.items())


def p1_max_height(a):
    return max(abs(c) for c in a.values()) if a else 0


def _genpoly1(g, xi):
    """xi-adic balanced reconstruction of a univariate poly from an int."""
    p = {}
    e = 0
    while g:
        d = g % xi
        if d > xi // 2:
            d -= xi
        if d:
            p[e] = d
        g = (g - d) // xi
        e += 1
    return p


def p1_divides(g, a):
    try:
        p1_divexact(a, g)
        return True
    except ArithmeticError:
        return False


def _p1_gcd_prs(a, b, cg):
    if p1_deg(a) < p1_deg(b):
        a, b = b, a
    while True:
        _, r = p1_pseudo_divmod(a, b)
        if p1_is_zero(r):
            g = b
            break
        if p1_deg(r) == 0:
            g = {0: 1}
            break
        a, b = b, p1_divexact_int(r, p1_content(r))
    g = p1_divexact_int(g, p1_content(g))
    if p1_lc(g) < 0:
        g = p1_neg(g)
    return p1_scale(g, cg) if cg != 1 else g


def p1_gcd(a, b):
    """gcd in Z[x]: heuristic evaluation gcd with a primitive-PRS fallback."""
    if p1_is_zero(a):
        return dict(b)
    if p1_is_zero(b):
        return dict(a)
    ca, cb = p1_content(a), p1_content(b)
    cg = _igcd(ca, cb)
    a = p1_divexact_int(a, ca)
    b = p1_divexact_int(b, cb)
    if len(a) == 1 or len(b) == 1:
        e = min(min(a), min(b))
        return {e: cg}
    xi = 2 * min(p1_max_height(a), p1_max_height(b)) + 4
    for _ in range(4):
        ga = p1_eval_int(a, xi)
        gb = p1_eval_int(b, xi)
        g0 = _igcd(ga, gb)
        if g0:
            cand = _genpoly1(g0, xi)
            c = p1_content(cand)
            if c > 1:
                cand = p1_divexact_int(cand, c)
            if cand and p1_lc(cand) < 0:
                cand = p1_neg(cand)
            if cand and p1_divides(cand, a) and p1_divides(cand, b):
                return p1_scale(cand, cg) if cg != 1 else cand
        xi = xi * 73 // 27 + 11
    return _p1_gcd_prs(a, b, cg)


def p1_divexact(a, b):
    """Exact division in Z[x]; raises if not exact."""
    if p1_is_zero(a):
        return {}
    q = {}
    r = dict(a)
    db = p1_deg(b)
    lb = p1_lc(b)
    while not p1_is_zero(r):
        dr = p1_deg(r)
        if dr < db or r[dr] % lb:
            raise ArithmeticError("non-exact univariate division")
        t = {dr - db: r[dr] // lb}
        q = p1_add(q, t)
        r = p1_add(r, p1_neg(p1_mul(t, b)))
    return q


# ---------------------------------------------------------------------------
# bivariate integer polynomials: dict (e1, e2) -> nonzero int
# ---------------------------------------------------------------------------

P2_ZERO = {}
P2_ONE = {(0, 0): 1}


def p2_is_zero(a):
    return not a


def p2_add(a, b):
    r = dict(a)
    for e, c in b.items():
        s = r.get(e, 0) + c
        if s:
            r[e] = s
        else:
            del r[e]
    return r


def p2_neg(a):
    return {e: -c for e, c in a.items()}


def p2_mul(a, b):
    if not a or not b:
        return {}
    if len(a) == 1:
        ((a1, a2), ca), = a.items()
        return {(a1 + e1, a2 + e2): ca * c for (e1, e2), c in b.items()}
    if len(b) == 1:
        ((b1, b2), cb), = b.items()
        return {(b1 + e1, b2 + e2): cb * c for (e1, e2), c in a.items()}
    r = {}
    for (a1, a2), ca in a.items():
        for (b1, b2), cb in b.items():
            e = (a1 + b1, a2 + b2)
            s = r.get(e, 0) + ca * cb
            if s:
                r[e] = s
            else:
                del r[e]
    return r


def p2_scale(a, k):
    if k == 0:
        return {}
    if k == 1:
        return dict(a)
    return {e: c * k for e, c in a.items()}


def p2_content_int(a):
    g = 0
    for c in a.values():
        g = _igcd(g, abs(c))
        if g == 1:
            return 1
    return g


def p2_divexact_int(a, k):
    if k == 1:
        return dict(a)
    return {e: c // k for e, c in a.items()}


def p2_min_exponents(a):
    e1 = min(e[0] for e in a)
    e2 = min(e[1] for e in a)
    return e1, e2


def p2_shift(a, s1, s2):
    if s1 == 0 and s2 == 0:
        return dict(a)
    return {(e1 + s1, e2 + s2): c for (e1, e2), c in a.items()}


def p2_lead_key(a):
    return max(a)


def p2_eval(a, x1, x2):
    return sum(c * x1 ** e1 * x2 ** e2 for (e1, e2), c in a.items())


def _p2_to_v(a):
    """View as polynomial in the second variable with Z[u] coefficients."""
    r = {}
    for (eu, ev), c in a.items():
        r.setdefault(ev, {})[eu] = c
    return r


def _v_to_p2(vp):
    r = {}
    for ev, cu in vp.items():
        for eu, c in cu.items():
            r[(eu, ev)] = c
    return r


def _vdeg(vp):
    return max(vp) if vp else -1


def _v_lc(vp):
    return vp[max(vp)]


def _v_content(vp):
    g = {}
    for cu in vp.values():
        g = p1_gcd(g, cu)
        if p1_deg(g) == 0 and p1_lc(g) == 1:
            return g
    return g


def _v_map(vp, fn):
    r = {}
    for ev, cu in vp.items():
        c2 = fn(cu)
        if not p1_is_zero(c2):
            r[ev] = c2
    return r


def _v_mul_coef(vp, cu):
    return _v_map(vp, lambda c: p1_mul(c, cu))


def _v_divexact_coef(vp, cu):
    return _v_map(vp, lambda c: p1_divexact(c, cu))


def _v_add(a, b):
    r = {ev: dict(cu) for ev, cu in a.items()}
    for ev, cu in b.items():
        s = p1_add(r.get(ev, {}), cu)
        if p1_is_zero(s):
            r.pop(ev, None)
        else:
            r[ev] = s
    return r


def _v_pseudo_divmod(a, b):
    da, db = _vdeg(a), _vdeg(b)
    lb = _v_lc(b)
    q, r = {}, {ev: dict(cu) for ev, cu in a.items()}
    while r and _vdeg(r) >= db:
        dr = _vdeg(r)
        lr = _v_lc(r)
        q = _v_add(_v_mul_coef(q, lb), {dr - db: lr})
        shifted = {ev + dr - db: p1_mul(cu, lr) for ev, cu in b.items()}
        r = _v_add(_v_mul_coef(r, lb), _v_map(shifted, p1_neg))
    return q, r


def _p2_eval_v(a, xi):
    """Substitute an integer for v, returning a univariate dict in u."""
    r = {}
    for (eu, ev), c in a.items():
        r[eu] = r.get(eu, 0) + c * xi ** ev
    return {e: c for e, c in r.items() if c}


def _genpoly2(g, xi):
    """xi-adic balanced reconstruction of a v-poly from a u-poly."""
    p = {}
    ev = 0
    while g:
        digit = {}
        rest = {}
        for eu, c in g.items():
            d = c % xi
            if d > xi // 2:
                d -= xi
            if d:
                digit[(eu, ev)] = d
            r = (c - d) // xi
            if r:
                rest[eu] = r
        p.update(digit)
        g = rest
        ev += 1
    return p


def p2_divides(g, a):
    try:
        p2_divexact(a, g)
        return True
    except ArithmeticError:
        return False


def p2_max_height(a):
    return max(abs(c) for c in a.values()) if a else 0


def p2_gcd(a, b):
    """gcd in Z[u, v]: heuristic gcd, falling back to primitive PRS in v."""
    if p2_is_zero(a):
        return dict(b)
    if p2_is_zero(b):
        return dict(a)
    ca, cb = p2_content_int(a), p2_content_int(b)
    a = p2_divexact_int(a, ca)
    b = p2_divexact_int(b, cb)
    cg = _igcd(ca, cb)
    # monomial fast paths
    if len(a) == 1 or len(b) == 1:
        ma1, ma2 = p2_min_exponents(a)
        mb1, mb2 = p2_min_exponents(b)
        g = {(min(ma1, mb1), min(ma2, mb2)): cg}
        return g
    # heuristic: evaluate v at a large integer, gcd in Z[u], reconstruct
    xi = 2 * min(p2_max_height(a), p2_max_height(b)) + 4
    for _ in range(4):
        ga = _p2_eval_v(a, xi)
        gb = _p2_eval_v(b, xi)
        if ga and gb:
            g1 = p1_gcd(ga, gb)
            cand = _genpoly2(g1, xi)
            c = p2_content_int(cand)
            if c > 1:
                cand = p2_divexact_int(cand, c)
            if cand and cand[p2_lead_key(cand)] < 0:
                cand = p2_neg(cand)
            if cand and p2_divides(cand, a) and p2_divides(cand, b):
                return p2_scale(cand, cg) if cg != 1 else cand
        xi = xi * 73 // 27 + 11
    va, vb = _p2_to_v(a), _p2_to_v(b)
    conta, contb = _v_content(va), _v_content(vb)
    ppa = _v_divexact_coef(va, conta)
    ppb = _v_divexact_coef(vb, contb)
    contg = p1_gcd(conta, contb)
    if _vdeg(ppa) < _vdeg(ppb):
        ppa, ppb = ppb, ppa
    while True:
        _, r = _v_pseudo_divmod(ppa, ppb)
        if not r:
            g = ppb
            break
        if _vdeg(r) == 0:
            g = {0: {0: 1}}
            break
        ppa, ppb = ppb, _v_divexact_coef(r, _v_content(r))
    g = _v_divexact_coef(g, _v_content(g))
    r2 = p2_mul(_v_to_p2(g), {(e, 0): c for e, c in contg.items()})
    r2 = p2_divexact_int(r2, p2_content_int(r2))
    if r2[p2_lead_key(r2)] < 0:
        r2 = p2_neg(r2)
    return p2_scale(r2, cg) if cg != 1 else r2


def p2_divexact(a, b):
    """Exact division in Z[u, v]; raises ArithmeticError if not exact."""
    if p2_is_zero(a):
        return {}
    if len(b) == 1:
        ((b1, b2), cb), = b.items()
        r = {}
        for (e1, e2), c in a.items():
            if c % cb:
                raise ArithmeticError("non-exact division (coefficient)")
            r[(e1 - b1, e2 - b2)] = c // cb
        if any(e1 < 0 or e2 < 0 for (e1, e2) in r):
            raise ArithmeticError("non-exact division (monomial)")
        return r
    va, vb = _p2_to_v(a), _p2_to_v(b)
    db = _vdeg(vb)
    lb = _v_lc(vb)
    q = {}
    r = va
    while r:
        dr = _vdeg(r)
        if dr < db:
            raise ArithmeticError("non-exact division (v-degree)")
        t = p1_divexact(_v_lc(r), lb)
        q[dr - db] = t
        sub = {ev + dr - db: p1_neg(p1_mul(cu, t)) for ev, cu in vb.items()}
        r = _v_add(r, sub)
    return _v_to_p2(q)


# ---------------------------------------------------------------------------
# the fraction field
# ---------------------------------------------------------------------------

class Frac2:
    """Reduced fraction of bivariate integer polynomials.

    Subclasses fix variable names for printing/serialization.  Negative
    variable powers are shifted into the denominator on construction, so
    Laurent content is transparent to callers.
    """

    __slots__ = ("num", "den")
    VARS = ("x1", "x2")

    def __init__(self, num, den=None, reduce=True):
        if den is None:
            den = dict(P2_ONE)
        if reduce:
            num = {e: c for e, c in num.items() if c}
            den = {e: c for e, c in den.items() if c}
        if p2_is_zero(den):
            raise ZeroDivisionError("division by zero in coefficient field")
        if p2_is_zero(num):
            self.num, self.den = {}, dict(P2_ONE)
            return
        # clear negative exponents
        n1 = min(0, min(e[0] for e in num), min(e[0] for e in den))
        n2 = min(0, min(e[1] for e in num), min(e[1] for e in den))
        if n1 or n2:
            num = p2_shift(num, -n1, -n2)
            den = p2_shift(den, -n1, -n2)
        if reduce:
            num, den = self._reduce(num, den)
        self.num, self.den = num, den

    @staticmethod
    def _reduce(num, den):
        # monomial part
        a1, a2 = p2_min_exponents(num)
        b1, b2 = p2_min_exponents(den)
        m1, m2 = min(a1, b1), min(a2, b2)
        if m1 or m2:
            num = p2_shift(num, -m1, -m2)
            den = p2_shift(den, -m1, -m2)
        cn, cd = p2_content_int(num), p2_content_int(den)
        c = _igcd(cn, cd)
        if c > 1:
            num = p2_divexact_int(num, c)
            den = p2_divexact_int(den, c)
        if den != P2_ONE:
            g = p2_gcd(num, den)
            if g != P2_ONE:
                num = p2_divexact(num, g)
                den = p2_divexact(den, g)
        if den[p2_lead_key(den)] < 0:
            num, den = p2_neg(num), p2_neg(den)
        return num, den

    # -- constructors ------------------------------------------------------
    @classmethod
    def zero(cls):
        return cls({}, dict(P2_ONE), reduce=False)

    @classmethod
    def one(cls):
        return cls(dict(P2_ONE), dict(P2_ONE), reduce=False)

    @classmethod
    def integer(cls, n):
        if n == 0:
            return cls.zero()
        return cls({(0, 0): n}, dict(P2_ONE), reduce=False)

    @classmethod
    def monomial(cls, c, e1, e2):
        """c * x1^e1 * x2^e2 with integer exponents of either sign."""
        if c == 0:
            return cls.zero()
        if e1 >= 0 and e2 >= 0:
            return cls({(e1, e2): c}, dict(P2_ONE), reduce=False)
        return cls({(max(e1, 0), max(e2, 0)): c},
                   {(max(-e1, 0), max(-e2, 0)): 1}, reduce=False)

    # -- predicates ---------------------------------------------------------
    def is_zero(self):
        return not self.num

    def is_one(self):
        return self.num == P2_ONE and self.den == P2_ONE

    def __eq__(self, other):
        if not isinstance(other, Frac2):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((frozenset(self.num.items()), frozenset(self.den.items())))

    def __bool__(self):
        return bool(self.num)

    # -- arithmetic ----------------------------------------------------------
    def __add__(self, other):
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        b, d = self.den, other.den
        if b == d:
            return type(self)(p2_add(self.num, other.num), dict(b))
        if b == P2_ONE:
            num = p2_add(p2_mul(self.num, d), other.num)
            return type(self)(num, dict(d))
        if d == P2_ONE:
            num = p2_add(self.num, p2_mul(other.num, b))
            return type(self)(num, dict(b))
        # Henrici: with g = gcd(b, d) the only reduction needed is against g
        g = p2_gcd(b, d)
        if g == P2_ONE:
            num = p2_add(p2_mul(self.num, d), p2_mul(other.num, b))
            r = type(self).__new__(type(self))
            r.num, r.den = num, p2_mul(b, d)
            if not num:
                r.den = dict(P2_ONE)
            return r
        b1 = p2_divexact(b, g)
        d1 = p2_divexact(d, g)
        t = p2_add(p2_mul(self.num, d1), p2_mul(other.num, b1))
        if not t:
            return type(self).zero()
        h = p2_gcd(t, g)
        if h != P2_ONE:
            t = p2_divexact(t, h)
            den = p2_mul(b1, p2_divexact(d, h))
        else:
            den = p2_mul(b1, d)
        r = type(self).__new__(type(self))
        r.num, r.den = t, den
        return r

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        r = type(self).__new__(type(self))
        r.num, r.den = p2_neg(self.num), dict(self.den)
        return r

    def __mul__(self, other):
        if self.is_zero() or other.is_zero():
            return type(self).zero()
        # cross-cancellation: with reduced inputs the cross-reduced product
        # is already in lowest terms
        n1, d2 = self.num, other.den
        if d2 != P2_ONE:
            g = p2_gcd(n1, d2)
            if g != P2_ONE:
                n1, d2 = p2_divexact(n1, g), p2_divexact(d2, g)
        n2, d1 = other.num, self.den
        if d1 != P2_ONE:
            g = p2_gcd(n2, d1)
            if g != P2_ONE:
                n2, d1 = p2_divexact(n2, g), p2_divexact(d1, g)
        r = type(self).__new__(type(self))
        r.num, r.den = p2_mul(n1, n2), p2_mul(d1, d2)
        return r

    def __truediv__(self, other):
        return self * other.inverse()

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("division by zero in coefficient field")
        return type(self)(dict(self.den), dict(self.num))

    def __pow__(self, n):
        if n == 0:
            return type(self).one()
        if n < 0:
            return self.inverse() ** (-n)
        r = type(self).one()
        b = self
        while n:
            if n & 1:
                r = r * b
            b = b * b if n > 1 else b
            n >>= 1
        return r

    # -- substitutions -------------------------------------------------------
    def _subs_inv(self, which):
        """Substitute x -> 1/x for variable index `which` (0 or 1)."""
        def flip(p):
            d = max(e[which] for e in p)
            r = {}
            for (e1, e2), c in p.items():
                e = (d - e1, e2) if which == 0 else (e1, d - e2)
                r[e] = c
            return r, d
        fn, dn = flip(self.num) if self.num else ({}, 0)
        fd, dd = flip(self.den)
        # num/x^dn over den/x^dd, rebalance with a monomial
        shift = dd - dn
        if shift >= 0:
            fn = p2_shift(fn, shift if which == 0 else 0,
                          shift if which == 1 else 0)
        else:
            fd = p2_shift(fd, -shift if which == 0 else 0,
                          -shift if which == 1 else 0)
        return type(self)(fn, fd)

    def subs_x1_inv(self):
        return self._subs_inv(0)

    def subs_x2_inv(self):
        return self._subs_inv(1)

    def _subs_value(self, which, p):
        """Substitute a polynomial dict for one variable (exact, may be slow)."""
        def image(poly):
            acc = {}
            for (e1, e2), c in poly.items():
                e = e1 if which == 0 else e2
                keep = {(0, e2) if which == 0 else (e1, 0): c}
                base = dict(P2_ONE)
                for _ in range(e):
                    base = p2_mul(base, p)
                acc = p2_add(acc, p2_mul(keep, base))
            return acc
        return type(self)(image(self.num), image(self.den))

    # -- limits --------------------------------------------------------------
    def _eval_var_zero(self, which):
        def at0(p):
            return {e: c for e, c in p.items() if e[which] == 0}
        d0 = at0(self.den)
        if p2_is_zero(d0):
            raise ArithmeticError("limit does not exist (pole)")
        return type(self)(at0(self.num), d0)

    def limit_x1_zero(self):
        return self._eval_var_zero(0)

    def limit_x2_zero(self):
        return self._eval_var_zero(1)

    def _eval_var_one(self, which):
        def at1(p):
            r = {}
            for (e1, e2), c in p.items():
                e = (0, e2) if which == 0 else (e1, 0)
                s = r.get(e, 0) + c
                if s:
                    r[e] = s
                else:
                    del r[e]
            return r
        d1 = at1(self.den)
        if p2_is_zero(d1):
            raise ArithmeticError("limit at 1 does not exist (pole)")
        return type(self)(at1(self.num), d1)

    def limit_x2_one(self):
        return self._eval_var_one(1)

    def _limit_var_inf(self, which):
        if self.is_zero():
            return type(self).zero()
        dn = max(e[which] for e in self.num)
        dd = max(e[which] for e in self.den)
        if dn > dd:
            raise ArithmeticError("limit diverges")
        def top(p, d):
            r = {}
            for (e1, e2), c in p.items():
                if (e1 if which == 0 else e2) == d:
                    r[(0, e2) if which == 0 else (e1, 0)] = c
            return r
        if dn < dd:
            return type(self).zero()
        return type(self)(top(self.num, dn), top(self.den, dd))

    def limit_x1_inf(self):
        return self._limit_var_inf(0)

    def limit_x2_inf(self):
        return self._limit_var_inf(1)

    # -- numeric -------------------------------------------------------------
    def eval_complex(self, x1, x2):
        d = p2_eval(self.den, x1, x2)
        if abs(d) < 1e-300:
            raise ZeroDivisionError(
                "pole at specialization: denominator %s vanishes"
                % _poly_str(self.den, self.VARS))
        return p2_eval(self.num, x1, x2) / d

    # -- printing ------------------------------------------------------------
    def __repr__(self):
        if self.is_zero():
            return "0"
        s = _poly_str(self.num, self.VARS)
        if self.den == P2_ONE:
            return s
        return "(%s)/(%s)" % (s, _poly_str(self.den, self.VARS))

    def serialize(self):
        return "%s/%s" % (_poly_ser(self.num, self.VARS),
                          _poly_ser(self.den, self.VARS))

    @classmethod
    def parse(cls, text):
        ns, ds = text.split("/")
        return cls(_poly_parse(ns, cls.VARS), _poly_parse(ds, cls.VARS))


def _poly_str(p, names):
    if not p:
        return "0"
    parts = []
    for (e1, e2), c in sorted(p.items()):
        factors = []
        if c != 1 or (e1 == 0 and e2 == 0):
            factors.append(str(c))
        if e1:
            factors.append("%s^%d" % (names[0], e1) if e1 != 1 else names[0])
        if e2:
            factors.append("%s^%d" % (names[1], e2) if e2 != 1 else names[1])
        parts.append("*".join(factors))
    return " + ".join(parts)


def _poly_ser(p, names):
    if not p:
        return "0"
    terms = []
    for (e1, e2), c in sorted(p.items()):
        terms.append("%d*%s^%d*%s^%d" % (c, names[0], e1, names[1], e2))
    return "+".join(terms)


def _poly_parse(text, names):
    text = text.strip()
    if text == "0":
        return {}
    p = {}
    for term in text.split("+"):
        c, m1, m2 = term.split("*")
        e1 = int(m1.split("^")[1])
        e2 = int(m2.split("^")[1])
        p[(e1, e2)] = int(c)
    return p


class Scalar(Frac2):
    """Element of the coefficient field: rational in u = q^(1/4), v = t^(1/2)."""

    __slots__ = ()
    VARS = ("u", "v")

    # exponents are quarter-powers of q and half-powers of t
    @classmethod
    def u_pow(cls, a):
        return cls.monomial(1, a, 0)

    @classmethod
    def v_pow(cls, b):
        return cls.monomial(1, 0, b)

    @classmethod
    def q_pow(cls, j):
        """q^j for integer j."""
        return cls.monomial(1, 4 * j, 0)

    @classmethod
    def q_half(cls, j):
        """q^(j/2)."""
        return cls.monomial(1, 2 * j, 0)

    @classmethod
    def t_pow(cls, j):
        """t^j for integer j."""
        return cls.monomial(1, 0, 2 * j)

    @classmethod
    def t_half(cls, j):
        """t^(j/2)."""
        return cls.monomial(1, 0, j)

    @classmethod
    def qt_mono(cls, c, qq, th):
        """c * q^(qq/4) * t^(th/2) in quarter/half units."""
        return cls.monomial(c, qq, th)

    # limits in the parameters
    def limit_q0(self):
        return self.limit_x1_zero()

    def limit_t0(self):
        return self.limit_x2_zero()

    def limit_t1(self):
        return self.limit_x2_one()

    def limit_tinf(self):
        return self.limit_x2_inf()

    def subs_q_inv(self):
        return self.subs_x1_inv()

    def subs_t_inv(self):
        return self.subs_x2_inv()

    def u_valuation(self):
        """Order of vanishing in u = q^(1/4); denominator must be regular."""
        if self.is_zero():
            return None
        vn = min(e[0] for e in self.num)
        vd = min(e[0] for e in self.den)
        return vn - vd

    def specialize(self, q0, t0):
        """Evaluate at numeric q0, t0 via principal branches of the roots."""
        u0 = complex(q0) ** 0.25
        v0 = complex(t0) ** 0.5
        return self.eval_complex(u0, v0)


class KXFrac(Frac2):
    """Coefficients of differential-theory operators: rational in k and X."""

    __slots__ = ()
    VARS = ("k", "X")

    @classmethod
    def k_lin(cls, a, b):
        """a + b*k."""
        p = {}
        if a:
            p[(0, 0)] = a
        if b:
            p[(1, 0)] = b
        return cls(p)

    @classmethod
    def x_pow(cls, n):
        return cls.monomial(1, 0, n)

    def subs_X_inv(self):
        return self.subs_x2_inv()


SCALAR_ZERO = Scalar.zero()
SCALAR_ONE = Scalar.one()
