"""Decide whether a coefficient tuple comes from a union of arcs, and recover it.

Pipeline for ``c = (c[0], ..., c[n])``:

1. Taylor coefficients of ``phi(c[0]/2 + sum c[k] z^k)`` to degree n form the
   first column of a lower-triangular Toeplitz matrix M.
2. If ``||M|| != 1`` the tuple is not in the range.
3. Otherwise take a least-degree q with ``||Mq|| = ||q||``; ``f = Mq/q`` is a
   Blaschke product, its level set ``{Im f >= 0}`` is a candidate union F,
   and c is in the range iff the Taylor column of ``b_F`` equals that of M.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Optional, Union

import numpy as np

from .arcset import TWO_PI, ArcUnion, FourierTuple, fourier_coefficients
from .blaschke import RationalBlaschke, endpoint_angles, from_quotient, level_set_arcs
from .errors import (
    DegenerateArc,
    DegenerateFormula,
    EmptyEigenspace,
    NonAlternatingRoots,
    NotBlaschke,
    OffCircleRoot,
    RoundTripFailure,
)
from .series import blaschke_taylor
from .toeplitz import (
    LowerToeplitz,
    apply,
    from_first_column,
    norm_preserving_min_degree_vector,
    operator_norm,
)


class Reason(str, enum.Enum):
    INVALID_MEAN_VALUE = "invalid_mean_value"
    NORM_NOT_ONE = "norm_not_one"
    OFF_CIRCLE_ROOT = "off_circle_root"
    NON_ALTERNATING_ROOTS = "non_alternating_roots"
    VERIFICATION_MISMATCH = "verification_mismatch"


@dataclass(frozen=True)
class Tolerances:
    tol_norm: float = 1e-8
    tol_eig: float = 1e-8
    tol_circle: float = 1e-6
    tol_verify: float = 1e-8

    def __post_init__(self):
        for name in ("tol_norm", "tol_eig", "tol_circle", "tol_verify"):
            value = getattr(self, name)
            if not (isinstance(value, (int, float)) and value > 0 and math.isfinite(value)):
                raise ValueError(f"{name} must be a positive finite number, got {value!r}")


DEFAULT_TOLERANCES = Tolerances()


@dataclass(frozen=True, eq=False)
class Recovered:
    arcs: ArcUnion
    order: int
    residual: float
    norm: float = 1.0
    blaschke: Optional[RationalBlaschke] = field(default=None, repr=False)
    column_mismatch: float = 0.0

    ok = True


@dataclass(frozen=True, eq=False)
class NotInRange:
    reason: Reason
    norm: Optional[float] = None
    mismatch: Optional[float] = None
    detail: str = ""

    ok = False


RecoveryOutcome = Union[Recovered, NotInRange]


def _as_tuple(c) -> FourierTuple:
    return c if isinstance(c, FourierTuple) else FourierTuple(c)


def classify_toeplitz(
    M: LowerToeplitz,
    t: Tolerances = DEFAULT_TOLERANCES,
    fourier: Optional[FourierTuple] = None,
) -> RecoveryOutcome:
    """Steps 2 and 3 on a matrix given by its Blaschke-coefficient column.

    When ``fourier`` is supplied the reported residual is the max-norm gap
    between it and the coefficients of the recovered union; otherwise it is
    the Taylor-column mismatch.
    """
    norm = operator_norm(M)
    if abs(norm - 1.0) > t.tol_norm:
        return NotInRange(Reason.NORM_NOT_ONE, norm=norm)

    try:
        q = norm_preserving_min_degree_vector(M, t.tol_eig)
    except EmptyEigenspace as exc:
        return NotInRange(Reason.NORM_NOT_ONE, norm=norm, detail=str(exc))
    try:
        f = from_quotient(apply(M, q), q)
    except NotBlaschke as exc:
        return NotInRange(Reason.VERIFICATION_MISMATCH, norm=norm, detail=str(exc))
    try:
        F = level_set_arcs(f, t.tol_circle)
    except OffCircleRoot as exc:
        return NotInRange(Reason.OFF_CIRCLE_ROOT, norm=norm, detail=str(exc))
    except (NonAlternatingRoots, DegenerateArc) as exc:
        return NotInRange(Reason.NON_ALTERNATING_ROOTS, norm=norm, detail=str(exc))

    n = M.n
    forward = fourier_coefficients(F, n)
    column = blaschke_taylor(forward).a
    mismatch = float(np.max(np.abs(column - M.col)))
    if mismatch > t.tol_verify:
        return NotInRange(
            Reason.VERIFICATION_MISMATCH,
            norm=norm,
            mismatch=mismatch,
            detail=f"Taylor column of the level-set union differs by {mismatch:.3g}",
        )
    residual = mismatch if fourier is None else float(np.max(np.abs(forward.c - fourier.c)))
    return Recovered(F, f.order, residual, norm, f, mismatch)


def recover(c, t: Tolerances = DEFAULT_TOLERANCES) -> RecoveryOutcome:
    """Recover the union of at most n arcs whose coefficients 0..n are ``c``.

    Returns ``Recovered`` or ``NotInRange``; only a solver hitting its
    iteration cap (``NoConvergence``) propagates as an exception.
    """
    c = _as_tuple(c)
    c0 = c.c[0]
    if not np.all(np.isfinite(c.c)):
        return NotInRange(Reason.INVALID_MEAN_VALUE, detail="non-finite coefficient")
    if abs(c0.imag) > t.tol_verify or not (-t.tol_verify <= c0.real <= 1.0 + t.tol_verify):
        return NotInRange(
            Reason.INVALID_MEAN_VALUE, detail=f"c[0] = {complex(c0)!r} is not a real number in [0, 1]"
        )

    mean = min(max(c0.real, 0.0), 1.0)
    rest = float(np.max(np.abs(c.c[1:]))) if c.n else 0.0
    for edge, value in ((0.0, ArcUnion.empty()), (1.0, ArcUnion.full())):
        if abs(mean - edge) <= t.tol_verify:
            if rest <= t.tol_verify:
                residual = float(max(abs(mean - edge), rest))
                return Recovered(value, 0, residual)
            # b_E(0) sits on the circle, so any further Taylor mass pushes ||M|| above 1
            shifted = c.c.copy()
            shifted[0] = edge
            M = from_first_column(blaschke_taylor(FourierTuple(shifted)).a)
            return NotInRange(Reason.NORM_NOT_ONE, norm=operator_norm(M))

    clean = c.c.copy()
    clean[0] = mean
    M = from_first_column(blaschke_taylor(FourierTuple(clean)).a)
    return classify_toeplitz(M, t, fourier=c)


def two_arc_starting_points(c0, c1, c2, tol_circle: float = 1e-6, floor: float = 1e-10):
    """Closed-form starting angles of a union of two arcs from c[0], c[1], c[2].

    With ``E0 = exp(2 pi i c0)`` and ``Ek = -2 pi i k ck`` the starts are the
    roots of ``z^2 - a z + (conj(E1) + (1 - E0) a) / (E1 E0)``, where::

        a = (E2 conj(E1) + 2 E1 - E1^2 conj(E1) - 2 E1 E0)
            / (E1^2 E0 + E2 E0 - E2 + E1^2)

    Raises ``DegenerateFormula`` when ``|E1|`` or the denominator of ``a`` is
    below ``floor``.
    """
    E0 = complex(np.exp(2j * math.pi * complex(c0).real))
    E1 = -2j * math.pi * complex(c1)
    E2 = -4j * math.pi * complex(c2)
    if abs(E1) <= floor:
        raise DegenerateFormula("E1 vanishes")
    denom = E1 * E1 * E0 + E2 * E0 - E2 + E1 * E1
    if abs(denom) <= floor:
        raise DegenerateFormula("denominator of a vanishes")
    a = (E2 * E1.conjugate() + 2 * E1 - E1 * E1 * E1.conjugate() - 2 * E1 * E0) / denom
    const = (E1.conjugate() + (1 - E0) * a) / (E1 * E0)
    disc = np.sqrt(complex(a * a - 4 * const))
    z = np.array([(a + disc) / 2, (a - disc) / 2])
    off = np.abs(np.abs(z) - 1.0) > tol_circle
    if off.any():
        raise OffCircleRoot(f"closed-form roots have moduli {np.abs(z)}")
    theta = np.angle(z) % TWO_PI
    return tuple(float(x) for x in np.sort(np.where(theta >= TWO_PI, 0.0, theta)))


def circular_distance(x, y):
    d = np.abs(np.asarray(x) - np.asarray(y)) % TWO_PI
    return np.minimum(d, TWO_PI - d)


def endpoint_error(E: ArcUnion, F: ArcUnion) -> float:
    """Largest circular distance between matched endpoints of two unions.

    Arcs are matched by the cyclic shift of F's arc list minimizing the
    worst distance.  Unions with different arc counts (or full vs. empty)
    are infinitely far apart.
    """
    if E.count != F.count:
        return math.inf
    if E.count == 0:
        return 0.0 if E.is_full == F.is_full else math.inf
    es, ee = E.starts, E.ends
    fs, fe = F.starts, F.ends
    best = math.inf
    for shift in range(F.count):
        worst = max(
            float(np.max(circular_distance(es, np.roll(fs, shift)))),
            float(np.max(circular_distance(ee, np.roll(fe, shift)))),
        )
        best = min(best, worst)
    return best


def roundtrip_error(E: ArcUnion, n: int, t: Tolerances = DEFAULT_TOLERANCES) -> float:
    """Endpoint error of ``recover(fourier_coefficients(E, n))`` against E."""
    if E.count > n:
        raise ValueError(f"{E.count} arcs cannot be recovered from {n + 1} coefficients")
    outcome = recover(fourier_coefficients(E, n), t)
    if not outcome.ok:
        raise RoundTripFailure(f"{E!r} was rejected: {outcome.reason.value} {outcome.detail}")
    err = endpoint_error(E, outcome.arcs)
    if not math.isfinite(err):
        raise RoundTripFailure(f"{E!r} came back as {outcome.arcs!r}")
    return err


def recovered_endpoints(outcome: Recovered, tol_circle: float = 1e-6):
    """The b = 1 and b = -1 circle roots behind a recovery (empty for order 0)."""
    if outcome.blaschke is None or outcome.order == 0:
        return np.zeros(0), np.zeros(0)
    return endpoint_angles(outcome.blaschke, tol_circle)
