"""Finite Blaschke products held as quotients p/q of coprime polynomials.

A rational function that is unimodular on the circle and has no poles in the
disk is a Blaschke product whose order is its number of zeros in the disk.
``from_quotient`` checks exactly these properties numerically.  On the circle
the argument of b is strictly increasing, so ``{Im b >= 0}`` consists of
``order`` arcs, each running from a solution of ``b = 1`` to the next
solution of ``b = -1``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .arcset import ArcUnion, normalize
from .errors import (
    NonAlternatingRoots,
    NotUnimodularOnCircle,
    PoleInDisk,
    ZeroCountMismatch,
)
from .polynomial import Polynomial
from .polyroot import circle_roots, roots
from .series import TruncatedSeries, mul, reciprocal

TWO_PI = 2.0 * math.pi
UNIMODULAR_TOL = 1e-8
POLE_MARGIN = 1e-8


@dataclass(frozen=True, eq=False)
class RationalBlaschke:
    p: Polynomial
    q: Polynomial
    order: int

    def __call__(self, z):
        return eval_blaschke(self, z)

    @property
    def unimodular_constant(self) -> complex:
        """The value of an order-0 product (meaningless otherwise)."""
        return complex(self.p[0] / self.q[0])


def from_quotient(
    p,
    q,
    unimodular_tol: float = UNIMODULAR_TOL,
    pole_margin: float = POLE_MARGIN,
) -> RationalBlaschke:
    """Validate ``p/q`` as a Blaschke product.

    The order is ``max(deg p, deg q)``: a zero at the origin lowers the
    degree of q but not of p, e.g. ``b(z) = z`` has ``q = 1``.

    Raises
    ------
    NotUnimodularOnCircle
        ``| |p| / |q| - 1 |`` exceeds ``unimodular_tol`` at some of
        ``4 (order + 2)`` equispaced circle points.
    PoleInDisk
        A root of q has modulus below ``1 + pole_margin``.
    ZeroCountMismatch
        p does not have exactly ``order`` zeros in the open disk.
    """
    p = p if isinstance(p, Polynomial) else Polynomial(p)
    q = q if isinstance(q, Polynomial) else Polynomial(q)
    if q.degree() < 0:
        raise ValueError("denominator is the zero polynomial")
    if p.degree() < 0:
        raise NotUnimodularOnCircle("numerator vanishes identically")
    p, q = p.trimmed(), q.trimmed()
    order = max(len(p), len(q)) - 1

    samples = 4 * (order + 2)
    z = np.exp(1j * (TWO_PI * np.arange(samples) / samples + 0.1))
    ratio = np.abs(p(z)) / np.abs(q(z))
    worst = float(np.max(np.abs(ratio - 1.0)))
    if not worst <= unimodular_tol:
        raise NotUnimodularOnCircle(f"|p/q| deviates from 1 by {worst:.3g} on the circle")

    if len(q) > 1:
        poles = roots(q)
        inner = np.abs(poles) < 1.0 + pole_margin
        if inner.any():
            raise PoleInDisk(f"denominator roots {poles[inner]} lie in the closed disk")
    elif q[0] == 0:
        raise PoleInDisk("denominator vanishes")

    zeros = roots(p) if len(p) > 1 else np.zeros(0)
    inside = int(np.sum(np.abs(zeros) < 1.0))
    if inside != order:
        raise ZeroCountMismatch(f"{inside} zeros in the disk, expected {order}")
    return RationalBlaschke(p, q, order)


def eval_blaschke(b: RationalBlaschke, z):
    return b.p(z) / b.q(z)


def angular_derivative(b: RationalBlaschke, z):
    """``z b'(z) / b(z)``, real and positive on the circle for a Blaschke product."""
    dp = Polynomial(b.p.coeffs[1:] * np.arange(1, len(b.p))) if len(b.p) > 1 else Polynomial([0])
    dq = Polynomial(b.q.coeffs[1:] * np.arange(1, len(b.q))) if len(b.q) > 1 else Polynomial([0])
    return z * (dp(z) / b.p(z) - dq(z) / b.q(z))


def taylor(b: RationalBlaschke, n: int) -> TruncatedSeries:
    """Taylor coefficients of b at 0 through degree n."""
    size = n + 1

    def fit(poly):
        out = np.zeros(size, dtype=complex)
        m = min(size, len(poly))
        out[:m] = poly.coeffs[:m]
        return TruncatedSeries(out)

    return mul(fit(b.p), reciprocal(fit(b.q)))


def interleaved(starts, ends) -> bool:
    """True when the two sorted angle lists strictly alternate around the circle."""
    starts, ends = np.asarray(starts), np.asarray(ends)
    if starts.size != ends.size:
        return False
    if starts.size == 0:
        return True
    labels = np.concatenate([np.zeros(starts.size), np.ones(ends.size)])
    angles = np.concatenate([starts, ends])
    order = np.argsort(angles, kind="stable")
    if np.any(np.diff(angles[order]) <= 0.0):
        return False
    seq = labels[order]
    return bool(np.all(seq[1:] != seq[:-1]))


def endpoint_angles(b: RationalBlaschke, tol_circle: float = 1e-6):
    """Angles where ``b = 1`` (arc starts) and where ``b = -1`` (arc ends)."""
    starts = circle_roots(b.p - b.q, tol_circle)
    ends = circle_roots(b.p + b.q, tol_circle)
    return starts, ends


def level_set_arcs(b: RationalBlaschke, tol_circle: float = 1e-6) -> ArcUnion:
    """The set ``{z on the circle : Im b(z) >= 0}`` as an ``ArcUnion``.

    Raises
    ------
    OffCircleRoot
        ``b = +-1`` has a solution off the circle.
    NonAlternatingRoots
        Start and end angles do not number ``order`` each or do not alternate.
    """
    if b.order == 0:
        lam = b.unimodular_constant
        return ArcUnion.full() if lam.imag >= 0.0 else ArcUnion.empty()

    starts, ends = endpoint_angles(b, tol_circle)
    if starts.size != b.order or ends.size != b.order or not interleaved(starts, ends):
        raise NonAlternatingRoots(
            f"expected {b.order} alternating roots of b = 1 and b = -1, "
            f"got {starts.size} and {ends.size}"
        )
    arcs = []
    for s in starts:
        later = ends[ends > s]
        e = later[0] if later.size else ends[0] + TWO_PI
        arcs.append((float(s), float(e)))
    out = normalize(arcs)
    if out.is_full or out.count != b.order:
        raise NonAlternatingRoots(f"level set collapsed to {out!r}")
    return out
