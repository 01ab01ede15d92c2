"""Public surface of the coefficient-arithmetic layer.

Collects the Scalar field, Laurent polynomials, truncated series and the
numeric specialization map in one namespace; the implementations live in
scalars.py and laurent.py.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

from .scalars import Frac2, KXFrac, Scalar, SCALAR_ONE, SCALAR_ZERO
from .laurent import LaurentPoly, TruncSeries, lp_gcd_reduce

__all__ = [
    "Scalar", "KXFrac", "Frac2", "LaurentPoly", "TruncSeries",
    "lp_gcd_reduce", "NumericScalar", "scalar_normalize",
    "laurent_apply_symmetry", "series_product", "specialize",
    "SCALAR_ONE", "SCALAR_ZERO",
]


def scalar_normalize(num, den):
    """Reduced canonical Scalar from raw numerator/denominator dicts.

    Dicts map (u-exponent, v-exponent) to int; u counts q^(1/4), v counts
    t^(1/2).  Raises ZeroDivisionError on a zero denominator.
    """
    return Scalar(dict(num), dict(den))


_SYMMETRIES = ("s", "Gamma", "Gamma_inv", "omega", "pi")


def laurent_apply_symmetry(f: LaurentPoly, g: str) -> LaurentPoly:
    """Apply one of s, Gamma, Gamma_inv, omega, pi to a one-variable poly."""
    if g == "s":
        return f.act_s()
    if g == "Gamma":
        return f.act_gamma(1)
    if g == "Gamma_inv":
        return f.act_gamma(-1)
    if g == "omega":
        return f.act_omega()
    if g == "pi":
        return f.act_pi()
    raise ValueError("unsupported symmetry %r; expected one of %s"
                     % (g, ", ".join(_SYMMETRIES)))


def series_product(a: TruncSeries, b: TruncSeries, order=None) -> TruncSeries:
    r = a * b
    if order is not None:
        if order > min(a.order, b.order):
            raise ValueError("requested order exceeds operand orders")
        r = r.truncate(order)
    return r


@dataclass(frozen=True)
class NumericScalar:
    """Complex value of a specialization, tagged with where it came from."""

    value: complex
    q0: complex
    t0: complex
    x0: complex | None = None

    def __complex__(self):
        return self.value


def specialize(f, q0, t0, x0=None) -> NumericScalar:
    """Numeric evaluation; X = q0^x0 when an x-origin is given (X = q^x)."""
    if isinstance(f, Scalar):
        val = f.specialize(q0, t0)
    elif isinstance(f, LaurentPoly):
        if x0 is None:
            raise ValueError("a Laurent polynomial needs an x0 to evaluate at")
        xval = cmath.exp(cmath.log(q0) * x0)
        val = f.eval_complex(xval, q0, t0)
    else:
        raise TypeError("cannot specialize %r" % type(f))
    return NumericScalar(val, complex(q0), complex(t0),
                         None if x0 is None else complex(x0))
