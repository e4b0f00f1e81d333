"""Exact arithmetic for the Kentucky-2 ((1,2)-Generacci) sequence.

Sequence terms, unique legal decompositions, summand-count statistics,
Gaussian-convergence diagnostics, gap distributions, and a big-integer
Monte Carlo sampler.  Large values cross the boundary as python ints and
exact rationals as fractions.Fraction.
"""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
