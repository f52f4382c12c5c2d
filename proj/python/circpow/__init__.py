"""Exact graph powers, homomorphisms and chromatic invariants.

All values are exact: chromatic quantities come back as `Rational`, searches
either return a checkable certificate, a definite non-existence answer, or
raise `Timeout` (never a silent wrong answer).
"""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
