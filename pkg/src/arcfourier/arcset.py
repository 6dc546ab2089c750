"""Unions of closed arcs on the unit circle and their Fourier coefficients.

An arc is stored as a pair ``(start, end)`` of radians with ``0 <= start < 2*pi``
and ``start < end < start + 2*pi``; an arc that crosses angle 0 simply carries
``end > 2*pi``.  The whole circle and the empty set are explicit values
(``ArcUnion.full()`` and ``ArcUnion.empty()``), both unions of zero arcs.

Coefficients with negative index are not stored: for an indicator function
``c[-k] == conj(c[k])``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import DegenerateArc

TWO_PI = 2.0 * math.pi
MIN_ARC_LENGTH = 1e-9
MIN_GAP = 1e-9


@dataclass(frozen=True)
class ArcUnion:
    arcs: tuple[tuple[float, float], ...] = ()
    is_full: bool = False

    @classmethod
    def full(cls) -> "ArcUnion":
        return cls((), True)

    @classmethod
    def empty(cls) -> "ArcUnion":
        return cls((), False)

    @property
    def count(self) -> int:
        return len(self.arcs)

    @property
    def starts(self) -> np.ndarray:
        return np.array([s for s, _ in self.arcs], dtype=float)

    @property
    def ends(self) -> np.ndarray:
        """End angles reduced to ``[0, 2*pi)``."""
        return np.array([e % TWO_PI for _, e in self.arcs], dtype=float)

    def __len__(self) -> int:
        return len(self.arcs)

    def __repr__(self) -> str:
        if self.is_full:
            return "ArcUnion.full()"
        if not self.arcs:
            return "ArcUnion.empty()"
        body = ", ".join(f"[{s:.12g}, {e:.12g}]" for s, e in self.arcs)
        return f"ArcUnion({body})"


@dataclass(frozen=True, eq=False)
class FourierTuple:
    """Coefficients ``c[k]`` of an indicator function for ``0 <= k <= n``."""

    c: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "c", np.asarray(self.c, dtype=complex).reshape(-1))
        if self.c.size == 0:
            raise ValueError("a Fourier tuple needs at least the mean value c[0]")

    @property
    def n(self) -> int:
        return self.c.size - 1

    def __getitem__(self, k):
        return self.c[k]

    def __len__(self) -> int:
        return self.c.size

    def __eq__(self, other):
        if not isinstance(other, FourierTuple):
            return NotImplemented
        return np.array_equal(self.c, other.c)


def _canonical_pair(start: float, end: float, min_arc_length: float):
    """Reduce one raw pair; returns None when the pair covers the circle."""
    start, end = float(start), float(end)
    if not (math.isfinite(start) and math.isfinite(end)):
        raise ValueError(f"non-finite arc endpoint in ({start}, {end})")
    if end - start >= TWO_PI:
        return None
    if 0.0 <= start < TWO_PI and start < end:
        return start, end
    s = start % TWO_PI
    if s >= TWO_PI:  # tiny negative starts round up to 2*pi
        s = 0.0
    length = (end - start) % TWO_PI
    if length < min_arc_length:
        raise DegenerateArc(f"arc ({start}, {end}) has (near) zero length")
    return s, s + length


def normalize(
    raw: Iterable[Sequence[float]] | ArcUnion,
    min_arc_length: float = MIN_ARC_LENGTH,
    min_gap: float = MIN_GAP,
) -> ArcUnion:
    """Canonicalize a list of ``(start, end)`` pairs into an ``ArcUnion``.

    Each pair runs counterclockwise from ``start`` to ``end``.  Pairs are
    reduced mod 2*pi, sorted, and merged when they overlap or when the gap
    between them is at most ``min_gap``.  A pair spanning 2*pi or more, or a
    merged measure reaching 2*pi, yields the full circle.

    Raises
    ------
    DegenerateArc
        If an arc is shorter than ``min_arc_length``.  A single point has
        the same Fourier coefficients as the empty set, so it is refused.
    """
    if isinstance(raw, ArcUnion):
        if raw.is_full:
            return raw
        raw = raw.arcs

    pairs = []
    for pair in raw:
        start, end = pair
        canon = _canonical_pair(start, end, min_arc_length)
        if canon is None:
            return ArcUnion.full()
        pairs.append(canon)
    if not pairs:
        return ArcUnion.empty()

    pairs.sort()
    merged = [list(pairs[0])]
    for s, e in pairs[1:]:
        last = merged[-1]
        if s - last[1] <= min_gap:
            last[1] = max(last[1], e)
        else:
            merged.append([s, e])

    # the last arc may run past 2*pi into the first ones
    while len(merged) > 1 and merged[0][0] + TWO_PI - merged[-1][1] <= min_gap:
        first = merged.pop(0)
        merged[-1][1] = max(merged[-1][1], first[1] + TWO_PI)

    total = sum(e - s for s, e in merged)
    if total >= TWO_PI - min_gap:
        return ArcUnion.full()
    if len(merged) == 1 and merged[0][1] - merged[0][0] >= TWO_PI - min_gap:
        return ArcUnion.full()

    for s, e in merged:
        if e - s < min_arc_length:
            raise DegenerateArc(f"arc [{s}, {e}] is shorter than {min_arc_length}")
    return ArcUnion(tuple((s, e) for s, e in merged), False)


def random_arc_union(rng: np.random.Generator, k: int, min_sep: float = 0.05) -> ArcUnion:
    """Draw a union of k arcs whose lengths and gaps are all at least ``min_sep``.

    The 2k endpoints are uniform on the circle conditioned on every spacing
    being at least ``min_sep``: spacings are ``min_sep`` plus a flat
    Dirichlet share of the slack, rotated by a uniform offset.  For k = 0 a
    fair coin picks the full circle or the empty set.
    """
    if k == 0:
        return ArcUnion.full() if rng.random() < 0.5 else ArcUnion.empty()
    m = 2 * k
    slack = TWO_PI - m * min_sep
    if slack <= 0:
        raise ValueError(f"{k} arcs with separation {min_sep} do not fit on the circle")
    gaps = min_sep + slack * rng.dirichlet(np.ones(m))
    points = rng.uniform(0.0, TWO_PI) + np.concatenate([[0.0], np.cumsum(gaps[:-1])])
    return normalize([(points[2 * j], points[2 * j + 1]) for j in range(k)])


def measure(E: ArcUnion) -> float:
    if E.is_full:
        return TWO_PI
    return math.fsum(e - s for s, e in E.arcs)


def contains(E: ArcUnion, angle: float) -> bool:
    if E.is_full:
        return True
    t = float(angle) % TWO_PI
    return any(s <= t <= e or s <= t + TWO_PI <= e for s, e in E.arcs)


def _split_on_base_interval(E: ArcUnion):
    """Arcs of E as subintervals of [0, 2*pi], splitting at angle 0."""
    if E.is_full:
        return [(0.0, TWO_PI)]
    out = []
    for s, e in E.arcs:
        if e <= TWO_PI:
            out.append((s, e))
        else:
            out.append((s, TWO_PI))
            out.append((0.0, e - TWO_PI))
    return out


def symmetric_difference_measure(E1: ArcUnion, E2: ArcUnion) -> float:
    """Lebesgue measure (radians) of the symmetric difference, by endpoint sweep."""
    parts1 = _split_on_base_interval(E1)
    parts2 = _split_on_base_interval(E2)
    cuts = sorted({0.0, TWO_PI, *(x for p in parts1 + parts2 for x in p)})

    def covered(parts, t):
        return any(a <= t <= b for a, b in parts)

    total = []
    for lo, hi in zip(cuts[:-1], cuts[1:]):
        mid = 0.5 * (lo + hi)
        if covered(parts1, mid) != covered(parts2, mid):
            total.append(hi - lo)
    return math.fsum(total)


def arc_coefficients(start: float, end: float, n: int) -> np.ndarray:
    """Coefficients 0..n of the indicator of the single arc [start, end]."""
    k = np.arange(1, n + 1)
    out = np.empty(n + 1, dtype=complex)
    out[0] = (end - start) / TWO_PI
    # e^{-ik end} - e^{-ik start} written through expm1 to keep short arcs accurate
    out[1:] = np.exp(-1j * k * start) * np.expm1(-1j * k * (end - start)) / (-2j * math.pi * k)
    return out


def fourier_coefficients(E: ArcUnion, n: int) -> FourierTuple:
    """The tuple ``(c[0], ..., c[n])`` with ``c[k] = (1/2pi) * int_E exp(-ikt) dt``."""
    n = int(n)
    if n < 0:
        raise ValueError("n must be nonnegative")
    c = np.zeros(n + 1, dtype=complex)
    if E.is_full:
        c[0] = 1.0
        return FourierTuple(c)
    for s, e in E.arcs:
        c += arc_coefficients(s, e, n)
    return FourierTuple(c)
