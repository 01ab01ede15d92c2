"""hecke-forge: exact symbolic and numeric engine for rank-one DAHA
special functions -- nonsymmetric Macdonald, Rogers, q-Hermite, spherical,
affine Hall, spinor q-Toda/Whittaker and Dunkl-Bessel families, with a
property-test harness for the defining operator identities.
"""

from .scalars import Scalar, KXFrac
from .laurent import LaurentPoly, TruncSeries

__version__ = "0.1.0"

__all__ = ["Scalar", "KXFrac", "LaurentPoly", "TruncSeries", "__version__"]
