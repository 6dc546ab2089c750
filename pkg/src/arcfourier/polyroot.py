"""Polynomial roots by Aberth-Ehrlich iteration, and roots on the unit circle."""

from __future__ import annotations

import math

import numpy as np

from .errors import NoConvergence, OffCircleRoot
from .polynomial import DEGREE_FLOOR, effective_degree

__all__ = ["effective_degree", "roots", "circle_roots", "TWO_PI"]

TWO_PI = 2.0 * math.pi
STEP_TOL = 1e-13
MAX_ITER = 500
RESIDUAL_TOL = 1e-9
CLUSTER_TOL = 1e-7
START_ROTATION = 0.4
RETRY_SEED = 20240613


def _coeffs(p) -> np.ndarray:
    return np.asarray(getattr(p, "coeffs", p), dtype=complex).reshape(-1)


def _residual_ok(c, z, rtol) -> np.ndarray:
    hi = c[::-1]
    val = np.abs(np.polyval(hi, z))
    scale = np.polyval(np.abs(hi), np.maximum(np.abs(z), 1.0))
    return val <= rtol * scale


def _aberth(c, z, max_iter, step_tol):
    """Run simultaneous Aberth-Ehrlich updates; return (roots, converged)."""
    hi = c[::-1]
    dhi = np.polyder(hi)
    d = z.size
    eye = np.eye(d, dtype=bool)
    for _ in range(max_iter):
        pz = np.polyval(hi, z)
        dpz = np.polyval(dhi, z)
        diff = z[:, None] - z[None, :]
        diff[eye] = 1.0
        inv = 1.0 / diff
        inv[eye] = 0.0
        sigma = inv.sum(axis=1)
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = pz / dpz
            step = ratio / (1.0 - ratio * sigma)
        step = np.where(pz == 0.0, 0.0, step)
        if not np.all(np.isfinite(step)):
            return z, False
        z = z - step
        if np.max(np.abs(step) / np.maximum(np.abs(z), 1.0)) < step_tol:
            return z, True
    return z, False


def roots(
    p,
    max_iter: int = MAX_ITER,
    step_tol: float = STEP_TOL,
    residual_tol: float = RESIDUAL_TOL,
    floor: float = DEGREE_FLOOR,
) -> np.ndarray:
    """All complex roots (with multiplicity) of a polynomial of effective degree >= 1.

    Parameters
    ----------
    p : Polynomial or sequence of complex
        Coefficients, lowest degree first.  Coefficients above the effective
        degree (relative ``floor``) are dropped.

    Raises
    ------
    NoConvergence
        If neither the equally spaced start nor one randomized restart
        reaches the step tolerance with acceptable residuals.
    """
    c = _coeffs(p)
    d = effective_degree(c, floor)
    if d < 1:
        raise ValueError(f"need effective degree >= 1, got {d}")
    c = c[: d + 1] / c[d]
    if d == 1:
        return np.array([-c[0]])

    radius = (1.0 + abs(c[0])) ** (1.0 / d)
    angles = TWO_PI * np.arange(d) / d + START_ROTATION
    starts = [radius * np.exp(1j * angles)]
    rng = np.random.default_rng(RETRY_SEED)
    starts.append(radius * np.exp(1j * rng.uniform(0.0, TWO_PI, d)) * rng.uniform(0.5, 1.5, d))

    for z0 in starts:
        # a capped run is still accepted when residuals are fine (repeated roots
        # converge only linearly)
        z, _ = _aberth(c, z0.astype(complex), max_iter, step_tol)
        if np.all(np.isfinite(z)) and _residual_ok(c, z, residual_tol).all():
            return z
    raise NoConvergence(f"Aberth iteration failed for degree {d} polynomial")


def circle_roots(
    p,
    tol_circle: float = 1e-6,
    cluster_tol: float = CLUSTER_TOL,
) -> np.ndarray:
    """Sorted angles in ``[0, 2 pi)`` of the roots of ``p`` on the unit circle.

    Every root must satisfy ``| |z| - 1 | <= tol_circle``; otherwise
    ``OffCircleRoot`` is raised.  Roots closer than ``cluster_tol`` in angle
    are merged into one (their mean), so a repeated root yields one angle.
    """
    c = _coeffs(p)
    d = effective_degree(c)
    if d < 0:
        raise ValueError("the zero polynomial has no isolated roots")
    if d == 0:
        return np.zeros(0)
    z = roots(c)
    off = np.abs(np.abs(z) - 1.0) > tol_circle
    if off.any():
        raise OffCircleRoot(
            f"{int(off.sum())} of {d} roots off the unit circle (moduli {np.abs(z[off])})"
        )
    theta = np.angle(z) % TWO_PI
    theta = np.sort(np.where(theta >= TWO_PI, 0.0, theta))
    if theta.size > 1:
        groups = [[theta[0]]]
        for t in theta[1:]:
            if t - groups[-1][-1] <= cluster_tol:
                groups[-1].append(t)
            else:
                groups.append([t])
        if len(groups) > 1 and groups[0][0] + TWO_PI - groups[-1][-1] <= cluster_tol:
            wrap = groups.pop()
            groups[0] = [t - TWO_PI for t in wrap] + groups[0]
        theta = np.sort(np.array([np.mean(g) % TWO_PI for g in groups]))
    return theta
