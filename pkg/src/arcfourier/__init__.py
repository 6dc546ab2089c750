"""Unions of arcs on the circle from their Fourier partial sums.

``fourier_coefficients`` maps a union of at most n arcs to its coefficients
0..n; ``recover`` decides whether a tuple of n+1 complex numbers arises this
way and, if so, returns the arcs.
"""

from .arcset import (
    ArcUnion,
    FourierTuple,
    contains,
    fourier_coefficients,
    measure,
    normalize,
    random_arc_union,
    symmetric_difference_measure,
)
from .blaschke import RationalBlaschke, from_quotient, level_set_arcs
from .errors import ArcFourierError
from .recovery import (
    NotInRange,
    Reason,
    Recovered,
    Tolerances,
    classify_toeplitz,
    recover,
    roundtrip_error,
    two_arc_starting_points,
)

__version__ = "0.1.0"
