"""Truncated power series and the analytic function h_E of an arc union.

``h_E(z) = c[0]/2 + sum_{k>=1} c[k] z^k`` maps the disk into the strip
``0 <= 2 Re w <= 1``.  Composing with the Cayley-type map

    phi(w) = (exp(2 pi i (w - 1/4)) - 1) / (exp(2 pi i (w - 1/4)) + 1)

sends it to a finite Blaschke product whose Taylor data we need to degree n.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .arcset import TWO_PI, ArcUnion, FourierTuple
from .errors import ConformalPole, DegreeMismatch, NearZeroConstantTerm, OutsideDisk

RECIPROCAL_FLOOR = 1e-12


@dataclass(frozen=True, eq=False)
class TruncatedSeries:
    """``sum a[k] z^k + O(z^(n+1))`` with complex coefficients."""

    a: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "a", np.asarray(self.a, dtype=complex).reshape(-1))
        if self.a.size == 0:
            raise ValueError("a truncated series has at least one coefficient")

    @classmethod
    def constant(cls, value, n: int) -> "TruncatedSeries":
        a = np.zeros(n + 1, dtype=complex)
        a[0] = value
        return cls(a)

    @property
    def n(self) -> int:
        return self.a.size - 1

    def __len__(self):
        return self.a.size

    def __getitem__(self, k):
        return self.a[k]

    def __call__(self, z):
        """Evaluate the degree-n polynomial part at ``z`` (Horner)."""
        return np.polyval(self.a[::-1], z)

    def _check(self, other):
        if other.n != self.n:
            raise DegreeMismatch(f"truncation degrees differ: {self.n} vs {other.n}")

    def __add__(self, other):
        if isinstance(other, TruncatedSeries):
            self._check(other)
            return TruncatedSeries(self.a + other.a)
        a = self.a.copy()
        a[0] += other
        return TruncatedSeries(a)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(-self.a)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return mul(self, other)
        return TruncatedSeries(self.a * other)

    __rmul__ = __mul__


def mul(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated at the common degree."""
    f._check(g)
    return TruncatedSeries(np.convolve(f.a, g.a)[: f.n + 1])


def exp(f: TruncatedSeries) -> TruncatedSeries:
    # g' = f' g  =>  k g[k] = sum_{j=1..k} j f[j] g[k-j]
    n = f.n
    g = np.zeros(n + 1, dtype=complex)
    g[0] = cmath.exp(f.a[0])
    jf = np.arange(n + 1) * f.a
    for k in range(1, n + 1):
        g[k] = np.dot(jf[1 : k + 1], g[k - 1 :: -1][:k]) / k
    return TruncatedSeries(g)


def reciprocal(f: TruncatedSeries, floor: float = RECIPROCAL_FLOOR) -> TruncatedSeries:
    f0 = f.a[0]
    if abs(f0) <= floor:
        raise NearZeroConstantTerm(f"constant term {f0!r} too close to zero to invert")
    n = f.n
    r = np.zeros(n + 1, dtype=complex)
    r[0] = 1.0 / f0
    for k in range(1, n + 1):
        r[k] = -np.dot(f.a[1 : k + 1], r[k - 1 :: -1][:k]) / f0
    return TruncatedSeries(r)


def herglotz_series(c: FourierTuple) -> TruncatedSeries:
    """Taylor coefficients of h_E: the mean value halved, the rest copied."""
    a = np.array(c.c if isinstance(c, FourierTuple) else c, dtype=complex)
    a[0] = a[0] / 2
    return TruncatedSeries(a)


def phi_compose(h: TruncatedSeries) -> TruncatedSeries:
    """Degree-n Taylor series of ``phi(h(z))``.

    Uses ``u = -i exp(2 pi i h)`` (the -1/4 shift is the factor -i) and
    ``phi = (u - 1) / (u + 1)``.
    """
    u = -1j * exp(2j * math.pi * h)
    try:
        inv = reciprocal(u + 1.0)
    except NearZeroConstantTerm as exc:
        raise ConformalPole(str(exc)) from exc
    return mul(u - 1.0, inv)


def blaschke_taylor(c: FourierTuple) -> TruncatedSeries:
    """Taylor coefficients of b_E up to degree n, straight from the tuple."""
    return phi_compose(herglotz_series(c))


def phi(w):
    """The conformal map of the strip onto the disk, evaluated pointwise."""
    u = np.exp(2j * np.pi * (np.asarray(w) - 0.25))
    return (u - 1) / (u + 1)


def h_closed_eval(E: ArcUnion, z) -> complex:
    """Evaluate h_E at a point of the open disk in closed form.

    Per arc ``[a, b]``::

        (b - a)/(4 pi) + (log(1 - e^{-ib} z) - log(1 - e^{-ia} z)) / (2 pi i)

    with the principal logarithm; the arguments stay in the right half plane.
    """
    z = complex(z)
    if abs(z) > 1.0 - 1e-12:
        raise OutsideDisk(f"|z| = {abs(z)} is not inside the unit disk")
    if E.is_full:
        return 0.5 + 0j
    total = 0j
    for a, b in E.arcs:
        total += (b - a) / (2 * TWO_PI)
        total += (cmath.log(1 - cmath.exp(-1j * b) * z) - cmath.log(1 - cmath.exp(-1j * a) * z)) / (
            2j * math.pi
        )
    return total


def poisson_extension(E: ArcUnion, r: float, t: float) -> float:
    """Harmonic extension of the indicator of E at ``r e^{it}``; lies in [0, 1]."""
    if not 0.0 <= r < 1.0:
        raise ValueError("radius must lie in [0, 1)")
    return 2.0 * h_closed_eval(E, r * cmath.exp(1j * t)).real
